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

#include "netcon/tree_solver.h"

#include <gtest/gtest.h>

#include "netcon/ola_reduction.h"
#include "netcon/oracle.h"
#include "test_util.h"

namespace netcon {
namespace {

SubtreeKey KeyOf(std::initializer_list<EdgeId> edges, int edge_count) {
  SubtreeKey key;
  key.words.assign(static_cast<size_t>((edge_count + 63) / 64), 0);
  for (const EdgeId e : edges) key.words[static_cast<size_t>(e) / 64] |= 1ULL << (e % 64);
  return key;
}

size_t PositionOf(const SubtreeInfo& info, EdgeId e) {
  for (size_t k = 0; k < info.edges.size(); ++k) {
    if (info.edges[k] == e) return k;
  }
  ADD_FAILURE() << "edge " << e << " not in subtree";
  return 0;
}

TEST(EnumerateSubtreesTest, Path) {
  const SubtreeCatalog c = EnumerateSubtrees(testing::PathABC().network());
  EXPECT_EQ(c.size(), 3);
  EXPECT_EQ(c.max_edges(), 2);
  EXPECT_EQ(c.level_begin(2) - c.level_begin(1), 2);
  EXPECT_NE(c.Find(KeyOf({0}, 2)), kNoSubtree);
  EXPECT_NE(c.Find(KeyOf({1}, 2)), kNoSubtree);
  EXPECT_EQ(c.Find(KeyOf({0, 1}, 2)), c.size() - 1);
}

TEST(EnumerateSubtreesTest, StarHasSevenSubtrees) {
  const Network star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  const SubtreeCatalog c = EnumerateSubtrees(star);
  EXPECT_EQ(c.size(), 7);
  EXPECT_EQ(c.level_begin(2) - c.level_begin(1), 3);
  EXPECT_EQ(c.level_begin(3) - c.level_begin(2), 3);
}

TEST(EnumerateSubtreesTest, SingleEdge) {
  const SubtreeCatalog c = EnumerateSubtrees(Network(2, {{0, 1, 3}}));
  ASSERT_EQ(c.size(), 1);
  EXPECT_EQ(c.at(0).split[0], (std::array<int, 2>{kNoSubtree, kNoSubtree}));
  EXPECT_EQ(c.at(0).total_length, 3);
}

TEST(EnumerateSubtreesTest, SplitsPointAtComponents) {
  // Path 0-1-2-3: removing the middle edge leaves {0-1} and {2-3}.
  const Network path(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  const SubtreeCatalog c = EnumerateSubtrees(path);
  EXPECT_EQ(c.size(), 6);
  const SubtreeInfo& full = c.at(c.size() - 1);
  const auto split = full.split[PositionOf(full, 1)];
  EXPECT_EQ(split[0], c.Find(KeyOf({0}, 3)));
  EXPECT_EQ(split[1], c.Find(KeyOf({2}, 3)));
}

TEST(EnumerateSubtreesTest, ParallelMatchesSerial) {
  GeneratorParams g = testing::SmallParams(GeneratorKind::kRandomTree, 12, 1, 4);
  const Network net = Generate(g).network();
  const SubtreeCatalog a = EnumerateSubtrees(net, 1);
  const SubtreeCatalog b = EnumerateSubtrees(net, 4);
  ASSERT_EQ(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.at(i).key, b.at(i).key);
    EXPECT_EQ(a.at(i).split, b.at(i).split);
  }
}

TEST(EnumerateSubtreesTest, RejectsNonTree) {
  EXPECT_THROW(EnumerateSubtrees(testing::UnitSquare()), InvalidInstanceError);
}

TEST(PairWeightTablesTest, PathWeights) {
  const Instance inst = testing::PathABC();
  const SubtreeCatalog c = EnumerateSubtrees(inst.network());
  const auto w = PairWeightTables(inst.network(), inst.pairs(), c);
  EXPECT_EQ(w[static_cast<size_t>(c.Find(KeyOf({0}, 2)))], 3);
  EXPECT_EQ(w[static_cast<size_t>(c.Find(KeyOf({1}, 2)))], 1);
  EXPECT_EQ(w[static_cast<size_t>(c.Find(KeyOf({0, 1}, 2)))], 5);
}

TEST(PairWeightTablesTest, SubtreeWithoutEndpointsIsZero) {
  const Instance inst(Network(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}), {{0, 1, 7, {}}});
  const SubtreeCatalog c = EnumerateSubtrees(inst.network());
  const auto w = PairWeightTables(inst.network(), inst.pairs(), c);
  EXPECT_EQ(w[static_cast<size_t>(c.Find(KeyOf({2}, 3)))], 0);
  EXPECT_EQ(w[static_cast<size_t>(c.Find(KeyOf({1, 2}, 3)))], 0);
}

TEST(CrossingWeightTest, PathExamples) {
  const Instance inst = testing::PathABC();
  const SubtreeCatalog c = EnumerateSubtrees(inst.network());
  const auto w = PairWeightTables(inst.network(), inst.pairs(), c);
  const int full = c.Find(KeyOf({0, 1}, 2));
  EXPECT_EQ(CrossingWeight(c, w, full, PositionOf(c.at(full), 0)), 4);
  EXPECT_EQ(CrossingWeight(c, w, full, PositionOf(c.at(full), 1)), 2);
  EXPECT_EQ(CrossingWeight(c, w, c.Find(KeyOf({0}, 2)), 0), 3);
}

TEST(MergeForEdgeTest, SingleEdgeSubtree) {
  const TreeDp dp(testing::PathABC());
  const int single = dp.catalog().Find(KeyOf({1}, 2));
  const MergeOutcome out =
      MergeForEdge(dp.catalog(), dp.pair_weight(), dp.records(), single, 0);
  EXPECT_EQ(out.sequence, (BuildSequence{1}));
  EXPECT_EQ(out.value, 2 * 1);
}

TEST(MergeForEdgeTest, FullPathBothLastEdges) {
  const TreeDp dp(testing::PathABC());
  const int full = dp.catalog().Find(KeyOf({0, 1}, 2));
  const SubtreeInfo& info = dp.catalog().at(full);
  const MergeOutcome bc_last =
      MergeForEdge(dp.catalog(), dp.pair_weight(), dp.records(), full, PositionOf(info, 1));
  EXPECT_EQ(bc_last.sequence, (BuildSequence{0, 1}));
  EXPECT_EQ(bc_last.value, 9);
  const MergeOutcome ab_last =
      MergeForEdge(dp.catalog(), dp.pair_weight(), dp.records(), full, PositionOf(info, 0));
  EXPECT_EQ(ab_last.sequence, (BuildSequence{1, 0}));
  EXPECT_EQ(ab_last.value, 14);
}

TEST(SolveTreeTest, PathExample) {
  const TreeSolution sol = SolveTree(testing::PathABC());
  EXPECT_EQ(sol.report.objective, 9);
  EXPECT_EQ(sol.sequence, (BuildSequence{0, 1}));
}

TEST(SolveTreeTest, OlaTriangleStar) {
  const OlaReduction red = ReduceOla({3, {{0, 1}, {1, 2}, {0, 2}}, 4});
  EXPECT_EQ(SolveTree(red.instance).report.objective, 22);
}

TEST(SolveTreeTest, SinglePairCostsPathLength) {
  const Network tree(6, {{0, 1, 2}, {1, 2, 3}, {1, 3, 4}, {3, 4, 5}, {3, 5, 6}});
  const TreeSolution sol = SolveTree(Instance(tree, {{2, 4, 7, {}}}));
  EXPECT_EQ(sol.report.objective, 7 * (3 + 4 + 5));
  // Unneeded edges follow the essential ones.
  EXPECT_EQ(sol.sequence.size(), 5U);
  EXPECT_EQ(sol.report.times[0], 12);
}

TEST(SolveTreeTest, SingleEdgeTree) {
  const TreeSolution sol = SolveTree(Instance(Network(2, {{0, 1, 5}}), {{0, 1, 2, {}}}));
  EXPECT_EQ(sol.sequence, (BuildSequence{0}));
  EXPECT_EQ(sol.report.objective, 10);
}

TEST(SolveTreeTest, RootRecordMatchesReport) {
  GeneratorParams g = testing::SmallParams(GeneratorKind::kRandomTree, 9, 6, 21);
  const Instance inst = Generate(g);
  TreeSolverOptions opt;
  opt.force = true;
  const TreeDp dp(inst, opt);
  EXPECT_EQ(dp.root().best_value, SolveTree(inst, opt).report.objective);
  EXPECT_EQ(dp.root().sequence().size(), static_cast<size_t>(inst.network().edge_count()));
}

TEST(SolveTreeTest, LeafGuard) {
  GeneratorParams g;
  g.kind = GeneratorKind::kStar;
  g.vertex_count = 8;
  g.pair_count = 2;
  const Instance star = Generate(g);
  EXPECT_THROW(SolveTree(star), GuardExceededError);
  TreeSolverOptions opt;
  opt.force = true;
  EXPECT_EQ(SolveTree(star, opt).report.objective, SubsetDp(star).objective);
  opt.force = false;
  opt.max_leaves = 7;
  EXPECT_NO_THROW(SolveTree(star, opt));
}

TEST(SolveTreeTest, RejectsNonTreeAndMaxLateness) {
  EXPECT_THROW(SolveTree(Instance(testing::UnitSquare(), {{0, 2, 1, {}}})),
               InvalidInstanceError);
  const Instance maxlat(Network(2, {{0, 1, 1}}), {{0, 1, 1, 0}}, Objective::kMaxLateness);
  EXPECT_THROW(SolveTree(maxlat), UnsupportedError);
}

TEST(SolveTreeTest, ThreadCountDoesNotChangeResult) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst =
        Generate(testing::SmallParams(GeneratorKind::kRandomTree, 10, 5, seed));
    TreeSolverOptions serial;
    serial.force = true;
    TreeSolverOptions parallel = serial;
    parallel.threads = 4;
    const TreeSolution a = SolveTree(inst, serial);
    const TreeSolution b = SolveTree(inst, parallel);
    EXPECT_EQ(a.sequence, b.sequence);
    EXPECT_EQ(a.report, b.report);
  }
}

}  // namespace
}  // namespace netcon
