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

#include "netcon/instance.h"

#include <gtest/gtest.h>

namespace netcon {
namespace {

TEST(NetworkTest, NormalizesEndpointsAndKeepsEdgeOrder) {
  Network net(4, {{3, 1, 2}, {0, 1, 5}, {2, 1, 1}});
  ASSERT_EQ(net.edge_count(), 3);
  EXPECT_EQ(net.edge(0), (Edge{1, 3, 2}));
  EXPECT_EQ(net.edge(1), (Edge{0, 1, 5}));
  EXPECT_EQ(net.edge(2), (Edge{1, 2, 1}));
  EXPECT_EQ(net.incident(1), (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_EQ(net.find_edge(3, 1), 0);
  EXPECT_FALSE(net.find_edge(0, 2).has_value());
  EXPECT_TRUE(net.is_tree());
  EXPECT_EQ(net.leaf_count(), 3);
  EXPECT_EQ(net.total_length(), 8);
}

TEST(NetworkTest, RejectsSelfLoop) {
  EXPECT_THROW(Network(2, {{0, 0, 5}, {0, 1, 1}}), InvalidInstanceError);
}

TEST(NetworkTest, RejectsDuplicateEdgeInEitherOrientation) {
  EXPECT_THROW(Network(2, {{0, 1, 1}, {1, 0, 2}}), InvalidInstanceError);
}

TEST(NetworkTest, RejectsNonPositiveLength) {
  EXPECT_THROW(Network(2, {{0, 1, 0}}), InvalidInstanceError);
  EXPECT_THROW(Network(2, {{0, 1, -3}}), InvalidInstanceError);
}

TEST(NetworkTest, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(Network(2, {{0, 2, 1}}), InvalidInstanceError);
  EXPECT_THROW(Network(2, {{-1, 1, 1}}), InvalidInstanceError);
}

TEST(NetworkTest, RejectsDisconnected) {
  EXPECT_THROW(Network(4, {{0, 1, 1}, {2, 3, 1}}), InvalidInstanceError);
}

TEST(NetworkTest, CycleIsNotATree) {
  Network net(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_FALSE(net.is_tree());
  EXPECT_EQ(net.leaf_count(), 0);
}

TEST(InstanceTest, NormalizesPairs) {
  Instance inst(Network(3, {{0, 1, 1}, {1, 2, 1}}), {{2, 0, 4, {}}});
  EXPECT_EQ(inst.pairs()[0].u, 0);
  EXPECT_EQ(inst.pairs()[0].v, 2);
  EXPECT_EQ(inst.objective(), Objective::kWeightedSum);
}

TEST(InstanceTest, RejectsBadPairs) {
  const Network net(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_THROW(Instance(net, {}), InvalidInstanceError);
  EXPECT_THROW(Instance(net, {{1, 1, 1, {}}}), InvalidInstanceError);
  EXPECT_THROW(Instance(net, {{0, 1, 0, {}}}), InvalidInstanceError);
  EXPECT_THROW(Instance(net, {{0, 3, 1, {}}}), InvalidInstanceError);
  EXPECT_THROW(Instance(net, {{0, 1, 1, {}}, {1, 0, 2, {}}}), InvalidInstanceError);
}

TEST(InstanceTest, MaxLatenessNeedsDueDates) {
  const Network net(2, {{0, 1, 1}});
  EXPECT_THROW(Instance(net, {{0, 1, 1, {}}}, Objective::kMaxLateness),
               InvalidInstanceError);
  EXPECT_NO_THROW(Instance(net, {{0, 1, 1, 3}}, Objective::kMaxLateness));
}

TEST(InstanceTest, CommonVertex) {
  const Network net(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_EQ(Instance(net, {{1, 0, 1, {}}, {1, 3, 1, {}}}).common_vertex(), 1);
  EXPECT_FALSE(Instance(net, {{0, 1, 1, {}}, {2, 3, 1, {}}}).common_vertex());
  // A single pair shares both endpoints; the smaller one is reported.
  EXPECT_EQ(Instance(net, {{3, 2, 1, {}}}).common_vertex(), 2);
}

TEST(InstanceTest, ObjectiveNames) {
  EXPECT_STREQ(ObjectiveName(Objective::kWeightedSum), "wct");
  EXPECT_STREQ(ObjectiveName(Objective::kMaxLateness), "maxlat");
}

}  // namespace
}  // namespace netcon
