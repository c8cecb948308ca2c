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

#include "netcon/ola_reduction.h"

#include <gtest/gtest.h>

#include "netcon/oracle.h"
#include "test_util.h"

namespace netcon {
namespace {

TEST(ReduceOlaTest, Triangle) {
  const OlaInput triangle{3, {{0, 1}, {1, 2}, {0, 2}}, 4};
  const OlaReduction red = ReduceOla(triangle);
  EXPECT_EQ(red.threshold, 22);
  const Network& net = red.instance.network();
  EXPECT_EQ(net.edges(), (std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}));
  int center = 0;
  int leaf = 0;
  for (const auto& p : red.instance.pairs()) {
    if (p.u == 0) {
      ++center;
      EXPECT_EQ(p.weight, 1);
    } else {
      ++leaf;
      EXPECT_EQ(p.weight, 2);
    }
  }
  EXPECT_EQ(center, 3);
  EXPECT_EQ(leaf, 3);
  EXPECT_EQ(SubsetDp(red.instance).objective, 22);
}

TEST(ReduceOlaTest, EdgelessPairMeetsThreshold) {
  const OlaReduction red = ReduceOla({2, {}, 0});
  EXPECT_EQ(red.threshold, 6);
  ASSERT_EQ(red.instance.pair_count(), 2);
  for (const auto& p : red.instance.pairs()) EXPECT_EQ(p.weight, 2);
  EXPECT_EQ(SubsetDp(red.instance).objective, 6);
}

TEST(ReduceOlaTest, CenterWeightsFollowDegrees) {
  // Path 0-1-2: degrees 1, 2, 1 give center weights 2, 1, 2.
  const OlaReduction red = ReduceOla({3, {{0, 1}, {1, 2}}, 0});
  ASSERT_EQ(red.instance.pair_count(), 5);
  std::vector<std::int64_t> center;
  for (const auto& p : red.instance.pairs()) {
    if (p.u == 0) center.push_back(p.weight);
  }
  EXPECT_EQ(center, (std::vector<std::int64_t>{2, 1, 2}));
}

TEST(ReduceOlaTest, OffsetFormula) {
  EXPECT_EQ(OlaOffset(1), 1);
  EXPECT_EQ(OlaOffset(3), 18);
  EXPECT_EQ(OlaOffset(5), 75);
}

TEST(OlaFormatTest, RoundTrip) {
  const OlaInput input{4, {{0, 3}, {1, 2}}, 9};
  const OlaInput back = ParseOla(WriteOla(input));
  EXPECT_EQ(back.vertex_count, 4);
  EXPECT_EQ(back.edges, input.edges);
  EXPECT_EQ(back.threshold, 9);
}

TEST(OlaFormatTest, ParsesFixture) {
  const OlaInput input = ParseOla(ReadFile(testing::Fixture("triangle.ola")));
  EXPECT_EQ(input.vertex_count, 3);
  EXPECT_EQ(input.edges.size(), 3U);
  EXPECT_EQ(input.threshold, 4);
}

TEST(OlaFormatTest, RejectsInvalidGraphs) {
  EXPECT_THROW(ValidateOla({3, {{0, 0}}, 0}), InvalidInstanceError);
  EXPECT_THROW(ValidateOla({3, {{0, 1}, {1, 0}}, 0}), InvalidInstanceError);
  EXPECT_THROW(ValidateOla({3, {{0, 5}}, 0}), InvalidInstanceError);
  EXPECT_THROW(ValidateOla({3, {}, -1}), InvalidInstanceError);
  EXPECT_THROW(ParseOla("ola 1\nvertices 2\nedge 0 0\n"), InvalidInstanceError);
  EXPECT_THROW(ParseOla("netcon 1\n"), InvalidInstanceError);
}

}  // namespace
}  // namespace netcon
