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

// Exact solver for tree networks.
//
// Every subtree T^ of the tree is solved in order of edge count. Fixing the
// edge e that is built last splits T^ into two smaller subtrees whose optimal
// orders stay optimal as chains, so the best order of T^ ending in e is an
// optimal two-chain merge followed by e. Pairs whose path crosses e all
// connect when e completes, at time length(T^). The best over e is kept.
//
// Work grows like n^(l+2) for a tree with l leaves; a leaf guard refuses
// large-l inputs unless forced.

#ifndef NETCON_TREE_SOLVER_H_
#define NETCON_TREE_SOLVER_H_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "netcon/chain_sched.h"
#include "netcon/evaluator.h"
#include "netcon/instance.h"

namespace netcon {

// Edge set of a subtree as a bitset over edge ids.
struct SubtreeKey {
  std::vector<std::uint64_t> words;

  bool contains(EdgeId e) const {
    return (words[static_cast<size_t>(e) / 64] >> (static_cast<size_t>(e) % 64)) & 1U;
  }
  friend bool operator==(const SubtreeKey&, const SubtreeKey&) = default;
};

struct SubtreeKeyHash {
  size_t operator()(const SubtreeKey& key) const;
};

inline constexpr int kNoSubtree = -1;

struct SubtreeInfo {
  SubtreeKey key;
  std::vector<EdgeId> edges;  // ascending
  std::int64_t total_length = 0;
  // Subtree this one was first grown from by one pendant edge, or kNoSubtree
  // for single edges; added_vertex is the new leaf (-1 for single edges).
  int parent = kNoSubtree;
  VertexId added_vertex = -1;
  // split[k] holds the catalog indices of the two components of
  // T^ - edges[k]: [0] contains edges[k].u, [1] contains edges[k].v.
  // Single-vertex components are kNoSubtree.
  std::vector<std::array<int, 2>> split;
};

class SubtreeCatalog {
 public:
  const std::vector<SubtreeInfo>& subtrees() const { return subtrees_; }
  const SubtreeInfo& at(int index) const { return subtrees_[static_cast<size_t>(index)]; }
  int size() const { return static_cast<int>(subtrees_.size()); }
  // Catalog indices of subtrees with p edges are [level_begin(p), level_begin(p+1)).
  int level_begin(int p) const { return level_begin_[static_cast<size_t>(p)]; }
  int max_edges() const { return static_cast<int>(level_begin_.size()) - 2; }
  // kNoSubtree when absent.
  int Find(const SubtreeKey& key) const;

 private:
  friend SubtreeCatalog EnumerateSubtrees(const Network& tree, int threads);

  std::vector<SubtreeInfo> subtrees_;
  std::vector<int> level_begin_;
  std::unordered_map<SubtreeKey, int, SubtreeKeyHash> index_;
};

// Every connected edge subset of the tree, grouped by edge count. Throws
// InvalidInstanceError if the network is not a tree.
SubtreeCatalog EnumerateSubtrees(const Network& tree, int threads = 1);

// W(T') for every catalog entry: total weight of pairs with both endpoints in
// T'. Built along the catalog's parent links.
std::vector<std::int64_t> PairWeightTables(const Network& tree,
                                           std::span<const RelevantPair> pairs,
                                           const SubtreeCatalog& catalog);

// W'(T^, e) = W(T^) - W(T^_1) - W(T^_2): weight of pairs inside T^ whose path
// uses e. `position` indexes SubtreeInfo::edges.
std::int64_t CrossingWeight(const SubtreeCatalog& catalog,
                            std::span<const std::int64_t> pair_weight, int subtree,
                            size_t position);

// Optimal order of one subtree. chain[k] is the k-th built edge as a job with
// p = edge length, w = weight of the subtree's pairs that connect when it
// completes (tag = edge id).
struct SubtreeRecord {
  Chain chain;
  std::vector<DensityBlock> blocks;
  std::int64_t best_value = 0;

  BuildSequence sequence() const;
};

struct MergeOutcome {
  BuildSequence sequence;
  std::int64_t value = 0;
};

// Best order of `subtree` that builds edges[position] last, given the records
// of its two components.
MergeOutcome MergeForEdge(const SubtreeCatalog& catalog,
                          std::span<const std::int64_t> pair_weight,
                          std::span<const SubtreeRecord> records, int subtree,
                          size_t position);

struct TreeSolverOptions {
  int max_leaves = 6;
  bool force = false;
  int threads = 1;
};

struct TreeSolution {
  BuildSequence sequence;
  ConnectionReport report;
};

// Full dynamic program with its intermediate tables exposed.
class TreeDp {
 public:
  // Throws InvalidInstanceError (not a tree), UnsupportedError (objective is
  // not wct) or GuardExceededError (too many leaves without force).
  TreeDp(const Instance& instance, const TreeSolverOptions& options = {});

  const SubtreeCatalog& catalog() const { return catalog_; }
  const std::vector<std::int64_t>& pair_weight() const { return pair_weight_; }
  const std::vector<SubtreeRecord>& records() const { return records_; }
  const SubtreeRecord& root() const { return records_.back(); }

 private:
  SubtreeCatalog catalog_;
  std::vector<std::int64_t> pair_weight_;
  std::vector<SubtreeRecord> records_;
};

// Optimal order for a tree instance. The report comes from the evaluator and
// is checked against the DP value.
TreeSolution SolveTree(const Instance& instance, const TreeSolverOptions& options = {});

}  // namespace netcon

#endif  // NETCON_TREE_SOLVER_H_
