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

// The oracles are ground truth for every other test, so they are checked
// against each other and against hand-computed values first.

#include "netcon/oracle.h"

#include <gtest/gtest.h>

#include "netcon/evaluator.h"
#include "netcon/generators.h"
#include "test_util.h"

namespace netcon {
namespace {

TEST(SubsetDpTest, PathExample) {
  const OracleSolution sol = SubsetDp(testing::PathABC());
  EXPECT_EQ(sol.objective, 9);
  EXPECT_EQ(sol.sequence, (BuildSequence{0, 1}));
}

TEST(SubsetDpTest, SequenceAchievesObjective) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorParams g = testing::SmallParams(GeneratorKind::kRandomGraph, 7, 3, seed);
    g.edge_count = 11;
    const Instance inst = Generate(g);
    const OracleSolution sol = SubsetDp(inst);
    // The sequence stops once every pair is connected.
    EXPECT_EQ(EvaluateSequence(inst, sol.sequence).objective, sol.objective);
  }
}

TEST(SubsetDpTest, MatchesPermutationOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorParams g = testing::SmallParams(GeneratorKind::kRandomGraph, 6, 1 + seed % 4, seed);
    g.edge_count = 5 + static_cast<int>(seed % 4);
    if (seed % 3 == 0) {
      g.objective = Objective::kMaxLateness;
      g.min_due = -3;
      g.max_due = 25;
    }
    const Instance inst = Generate(g);
    EXPECT_EQ(SubsetDp(inst).objective, PermutationOracle(inst)) << seed;
  }
}

TEST(SubsetDpTest, MaxLatenessExample) {
  const Instance inst(Network(3, {{0, 1, 1}, {1, 2, 1}}), {{0, 1, 1, 1}, {0, 2, 1, 2}},
                      Objective::kMaxLateness);
  EXPECT_EQ(SubsetDp(inst).objective, 0);
  EXPECT_EQ(PermutationOracle(inst), 0);
}

TEST(SubsetDpTest, EdgeGuard) {
  GeneratorParams g = testing::SmallParams(GeneratorKind::kRandomGraph, 10, 1, 1);
  g.edge_count = 23;
  const Instance inst = Generate(g);
  EXPECT_THROW(SubsetDp(inst), GuardExceededError);
  OracleOptions small;
  small.max_edges_subset = 1;
  EXPECT_THROW(SubsetDp(testing::PathABC(), small), GuardExceededError);
  small.force = true;
  EXPECT_EQ(SubsetDp(testing::PathABC(), small).objective, 9);
}

TEST(PermutationOracleTest, PathExample) {
  EXPECT_EQ(PermutationOracle(testing::PathABC()), 9);
}

TEST(PermutationOracleTest, Guard) {
  GeneratorParams g = testing::SmallParams(GeneratorKind::kPath, 10, 1, 1);
  EXPECT_THROW(PermutationOracle(Generate(g)), GuardExceededError);
}

TEST(InterleavingOracleTest, HandExamples) {
  const Chain a{{1, 3, 0}};
  const Chain b{{2, 1, 1}};
  EXPECT_EQ(InterleavingOracle(a, b), 6);
  EXPECT_EQ(InterleavingOracle(Chain{}, Chain{}), 0);
  EXPECT_EQ(InterleavingOracle(Chain{{2, 1, 0}, {1, 5, 1}}, Chain{{1, 2, 2}}), 25);
}

TEST(InterleavingOracleTest, Guard) {
  const Chain long_chain(15, Job{1, 1, 0});
  EXPECT_THROW(InterleavingOracle(long_chain, Chain{}), GuardExceededError);
}

TEST(OlaOptimumTest, SmallGraphs) {
  EXPECT_EQ(OlaOptimum({3, {{0, 1}, {1, 2}, {0, 2}}, 0}), 4);
  EXPECT_EQ(OlaOptimum({4, {{0, 1}, {1, 2}, {2, 3}}, 0}), 3);
  // Star K_{1,3}: the center sits in the middle, stretches 1 + 1 + 2.
  EXPECT_EQ(OlaOptimum({4, {{0, 1}, {0, 2}, {0, 3}}, 0}), 4);
  EXPECT_EQ(OlaOptimum({2, {}, 0}), 0);
}

}  // namespace
}  // namespace netcon
