// Copyright 2026 The netcon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcon/chain_sched.h"

#include <gtest/gtest.h>

#include "netcon/generators.h"
#include "netcon/oracle.h"

namespace netcon {
namespace {

Chain MakeChain(std::initializer_list<std::pair<std::int64_t, std::int64_t>> jobs,
                std::int32_t first_tag = 0) {
  Chain chain;
  for (const auto& [p, w] : jobs) chain.push_back({p, w, first_tag++});
  return chain;
}

TEST(DensityTest, ExactComparison) {
  EXPECT_EQ((Density{4, 2}), (Density{2, 1}));
  EXPECT_LT((Density{1, 3}), (Density{1, 2}));
  const std::int64_t big = std::int64_t{1} << 40;
  EXPECT_LT((Density{big, big + 1}), (Density{big + 1, big + 2}));
}

TEST(DensityDecompositionTest, EmptyChain) {
  EXPECT_TRUE(DensityDecomposition(Chain{}).empty());
}

TEST(DensityDecompositionTest, IncreasingDensitiesFuse) {
  const auto blocks = DensityDecomposition(MakeChain({{1, 1}, {1, 3}}));
  ASSERT_EQ(blocks.size(), 1U);
  EXPECT_EQ(blocks[0].begin, 0U);
  EXPECT_EQ(blocks[0].end, 2U);
  EXPECT_EQ(blocks[0].density(), (Density{4, 2}));
  EXPECT_EQ(blocks[0].self_cost, 1 * 1 + 3 * 2);
}

TEST(DensityDecompositionTest, DecreasingDensitiesSplit) {
  const auto blocks = DensityDecomposition(MakeChain({{1, 3}, {1, 1}}));
  ASSERT_EQ(blocks.size(), 2U);
  EXPECT_EQ(blocks[0].density(), (Density{3, 1}));
  EXPECT_EQ(blocks[1].density(), (Density{1, 1}));
}

TEST(DensityDecompositionTest, EqualDensitiesFuse) {
  const auto blocks = DensityDecomposition(MakeChain({{1, 2}, {2, 4}, {1, 0}}));
  ASSERT_EQ(blocks.size(), 2U);
  EXPECT_EQ(blocks[0].end, 2U);
}

TEST(DensityDecompositionTest, ZeroWeightChainIsOneBlock) {
  const auto blocks = DensityDecomposition(MakeChain({{2, 0}, {3, 0}}));
  ASSERT_EQ(blocks.size(), 1U);
  EXPECT_EQ(blocks[0].density(), (Density{0, 5}));
}

TEST(RhoFactorTest, Examples) {
  EXPECT_EQ(RhoFactor(Chain{}), (Density{0, 1}));
  EXPECT_EQ(RhoFactor(MakeChain({{1, 3}, {1, 1}})), (Density{3, 1}));
  EXPECT_EQ(RhoFactor(MakeChain({{2, 1}, {1, 5}})), (Density{6, 3}));
}

TEST(MergeTwoChainsTest, SingleChainPassthrough) {
  const MergedSchedule m = MergeTwoChains(MakeChain({{1, 3}}), Chain{});
  ASSERT_EQ(m.order.size(), 1U);
  EXPECT_EQ(m.order[0], (JobRef{0, 0}));
  EXPECT_EQ(m.objective, 3);
}

TEST(MergeTwoChainsTest, HigherDensityFirst) {
  const Chain a = MakeChain({{1, 3}});
  const Chain b = MakeChain({{2, 1}}, 10);
  const MergedSchedule m = MergeTwoChains(a, b);
  EXPECT_EQ(m.objective, 6);
  EXPECT_EQ(MergedTags(m, a, b), (std::vector<std::int32_t>{0, 10}));
  EXPECT_EQ(InterleavingOracle(a, b), 6);
}

TEST(MergeTwoChainsTest, TieGoesToFirstChain) {
  const Chain a = MakeChain({{2, 1}, {1, 5}});
  const Chain b = MakeChain({{1, 2}}, 10);
  const MergedSchedule m = MergeTwoChains(a, b);
  EXPECT_EQ(m.objective, 25);
  EXPECT_EQ(MergedTags(m, a, b), (std::vector<std::int32_t>{0, 1, 10}));
  EXPECT_EQ(InterleavingOracle(a, b), 25);
}

TEST(MergeTwoChainsTest, BothEmpty) {
  const MergedSchedule m = MergeTwoChains(Chain{}, Chain{});
  EXPECT_TRUE(m.order.empty());
  EXPECT_EQ(m.objective, 0);
}

TEST(MergeTwoChainsTest, BlockOverloadAndObjectiveAgree) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Chain a;
    Chain b;
    for (int i = 0, n = static_cast<int>(rng.Uniform(0, 6)); i < n; ++i) {
      a.push_back({rng.Uniform(1, 9), rng.Uniform(0, 9), i});
    }
    for (int i = 0, n = static_cast<int>(rng.Uniform(0, 6)); i < n; ++i) {
      b.push_back({rng.Uniform(1, 9), rng.Uniform(0, 9), 100 + i});
    }
    const auto ba = DensityDecomposition(a);
    const auto bb = DensityDecomposition(b);
    const MergedSchedule plain = MergeTwoChains(a, b);
    const MergedSchedule reused = MergeTwoChains(a, ba, b, bb);
    EXPECT_EQ(plain.order, reused.order);
    EXPECT_EQ(plain.objective, MergeObjective(ba, bb));

    Chain merged;
    for (const JobRef& ref : plain.order) merged.push_back((ref.chain == 0 ? a : b)[ref.index]);
    EXPECT_EQ(WeightedCompletion(merged), plain.objective);
  }
}

TEST(WeightedCompletionTest, Basic) {
  EXPECT_EQ(WeightedCompletion(MakeChain({{1, 3}, {2, 1}})), 3 * 1 + 1 * 3);
  EXPECT_EQ(WeightedCompletion(Chain{}), 0);
}

}  // namespace
}  // namespace netcon
