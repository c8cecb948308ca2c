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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parallel.h"

namespace netcon {

size_t SubtreeKeyHash::operator()(const SubtreeKey& key) const {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (const std::uint64_t w : key.words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

int SubtreeCatalog::Find(const SubtreeKey& key) const {
  const auto it = index_.find(key);
  return it == index_.end() ? kNoSubtree : it->second;
}

BuildSequence SubtreeRecord::sequence() const {
  BuildSequence seq;
  seq.reserve(chain.size());
  for (const Job& j : chain) seq.push_back(j.tag);
  return seq;
}

namespace {

void SetBit(SubtreeKey& key, EdgeId e) {
  key.words[static_cast<size_t>(e) / 64] ^= std::uint64_t{1} << (static_cast<size_t>(e) % 64);
}

// Catalog indices of the two components of the subtree minus edges[position].
std::array<int, 2> SplitAt(const Network& tree, const SubtreeCatalog& catalog,
                           const SubtreeInfo& info, size_t position,
                           std::vector<char>& seen, std::vector<VertexId>& stack) {
  const EdgeId cut = info.edges[position];
  const Edge& ce = tree.edge(cut);

  SubtreeKey side{std::vector<std::uint64_t>(info.key.words.size(), 0)};
  bool side_empty = true;
  std::vector<VertexId> touched = {ce.u};
  seen[static_cast<size_t>(ce.u)] = 1;
  stack.assign(1, ce.u);
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const EdgeId f : tree.incident(x)) {
      if (f == cut || !info.key.contains(f)) continue;
      const Edge& fe = tree.edge(f);
      const VertexId y = fe.u == x ? fe.v : fe.u;
      if (seen[static_cast<size_t>(y)]) continue;
      seen[static_cast<size_t>(y)] = 1;
      touched.push_back(y);
      stack.push_back(y);
      SetBit(side, f);
      side_empty = false;
    }
  }
  for (const VertexId x : touched) seen[static_cast<size_t>(x)] = 0;

  SubtreeKey other = info.key;
  SetBit(other, cut);
  bool other_empty = true;
  for (size_t w = 0; w < other.words.size(); ++w) {
    other.words[w] ^= side.words[w];
    other_empty = other_empty && other.words[w] == 0;
  }

  const int a = side_empty ? kNoSubtree : catalog.Find(side);
  const int b = other_empty ? kNoSubtree : catalog.Find(other);
  if ((!side_empty && a == kNoSubtree) || (!other_empty && b == kNoSubtree)) {
    throw std::logic_error("subtree catalog is missing a component");
  }
  return {a, b};
}

}  // namespace

SubtreeCatalog EnumerateSubtrees(const Network& tree, int threads) {
  if (!tree.is_tree()) {
    throw InvalidInstanceError("network is not a tree (m = " +
                               std::to_string(tree.edge_count()) + ", n = " +
                               std::to_string(tree.vertex_count()) + ")");
  }
  SubtreeCatalog catalog;
  const int m = tree.edge_count();
  const size_t words = (static_cast<size_t>(m) + 63) / 64;
  auto& subtrees = catalog.subtrees_;

  catalog.level_begin_.push_back(0);  // p = 0 is empty
  catalog.level_begin_.push_back(0);
  for (EdgeId e = 0; e < m; ++e) {
    SubtreeInfo info;
    info.key.words.assign(words, 0);
    SetBit(info.key, e);
    info.edges = {e};
    info.total_length = tree.edge(e).length;
    catalog.index_.emplace(info.key, static_cast<int>(subtrees.size()));
    subtrees.push_back(std::move(info));
  }

  // Grow level p + 1 from level p by one pendant edge at a time.
  std::vector<char> in_sub(static_cast<size_t>(tree.vertex_count()), 0);
  for (int p = 1; p < m; ++p) {
    const int begin = catalog.level_begin_.back();
    const int end = static_cast<int>(subtrees.size());
    catalog.level_begin_.push_back(end);
    for (int idx = begin; idx < end; ++idx) {
      std::vector<VertexId> verts;
      for (const EdgeId e : subtrees[static_cast<size_t>(idx)].edges) {
        for (const VertexId x : {tree.edge(e).u, tree.edge(e).v}) {
          if (!in_sub[static_cast<size_t>(x)]) {
            in_sub[static_cast<size_t>(x)] = 1;
            verts.push_back(x);
          }
        }
      }
      std::sort(verts.begin(), verts.end());
      for (const VertexId x : verts) {
        for (const EdgeId f : tree.incident(x)) {
          const SubtreeInfo& base = subtrees[static_cast<size_t>(idx)];
          if (base.key.contains(f)) continue;
          SubtreeKey grown = base.key;
          SetBit(grown, f);
          if (catalog.index_.count(grown)) continue;
          const Edge& fe = tree.edge(f);
          SubtreeInfo info;
          info.key = grown;
          info.edges = base.edges;
          info.edges.insert(std::upper_bound(info.edges.begin(), info.edges.end(), f), f);
          info.total_length = base.total_length + fe.length;
          info.parent = idx;
          info.added_vertex = fe.u == x ? fe.v : fe.u;
          catalog.index_.emplace(std::move(grown), static_cast<int>(subtrees.size()));
          subtrees.push_back(std::move(info));
        }
      }
      for (const VertexId x : verts) in_sub[static_cast<size_t>(x)] = 0;
    }
  }
  catalog.level_begin_.push_back(static_cast<int>(subtrees.size()));

  internal::ParallelFor(0, subtrees.size(), threads, [&](size_t idx) {
    std::vector<char> seen(static_cast<size_t>(tree.vertex_count()), 0);
    std::vector<VertexId> stack;
    SubtreeInfo& info = subtrees[idx];
    info.split.resize(info.edges.size());
    for (size_t k = 0; k < info.edges.size(); ++k) {
      info.split[k] = SplitAt(tree, catalog, info, k, seen, stack);
    }
  });
  return catalog;
}

std::vector<std::int64_t> PairWeightTables(const Network& tree,
                                           std::span<const RelevantPair> pairs,
                                           const SubtreeCatalog& catalog) {
  std::vector<std::vector<std::pair<VertexId, std::int64_t>>> at(
      static_cast<size_t>(tree.vertex_count()));
  for (const RelevantPair& p : pairs) {
    at[static_cast<size_t>(p.u)].emplace_back(p.v, p.weight);
    at[static_cast<size_t>(p.v)].emplace_back(p.u, p.weight);
  }

  std::vector<std::int64_t> weight(static_cast<size_t>(catalog.size()), 0);
  for (int idx = 0; idx < catalog.size(); ++idx) {
    const SubtreeInfo& info = catalog.at(idx);
    if (info.parent == kNoSubtree) {
      const Edge& e = tree.edge(info.edges.front());
      for (const auto& [other, w] : at[static_cast<size_t>(e.u)]) {
        if (other == e.v) weight[static_cast<size_t>(idx)] += w;
      }
      continue;
    }
    // The new leaf adds its pairs to vertices already in the parent.
    const SubtreeKey& parent_key = catalog.at(info.parent).key;
    std::int64_t added = 0;
    for (const auto& [other, w] : at[static_cast<size_t>(info.added_vertex)]) {
      const auto& inc = tree.incident(other);
      if (std::any_of(inc.begin(), inc.end(),
                      [&](EdgeId f) { return parent_key.contains(f); })) {
        added += w;
      }
    }
    weight[static_cast<size_t>(idx)] = weight[static_cast<size_t>(info.parent)] + added;
  }
  return weight;
}

std::int64_t CrossingWeight(const SubtreeCatalog& catalog,
                            std::span<const std::int64_t> pair_weight, int subtree,
                            size_t position) {
  const auto [a, b] = catalog.at(subtree).split[position];
  std::int64_t w = pair_weight[static_cast<size_t>(subtree)];
  if (a != kNoSubtree) w -= pair_weight[static_cast<size_t>(a)];
  if (b != kNoSubtree) w -= pair_weight[static_cast<size_t>(b)];
  return w;
}

namespace {

std::span<const Job> ChainOf(std::span<const SubtreeRecord> records, int idx) {
  if (idx == kNoSubtree) return {};
  return records[static_cast<size_t>(idx)].chain;
}

std::span<const DensityBlock> BlocksOf(std::span<const SubtreeRecord> records, int idx) {
  if (idx == kNoSubtree) return {};
  return records[static_cast<size_t>(idx)].blocks;
}

}  // namespace

MergeOutcome MergeForEdge(const SubtreeCatalog& catalog,
                          std::span<const std::int64_t> pair_weight,
                          std::span<const SubtreeRecord> records, int subtree,
                          size_t position) {
  const SubtreeInfo& info = catalog.at(subtree);
  const auto [a, b] = info.split[position];
  const MergedSchedule merged = MergeTwoChains(ChainOf(records, a), BlocksOf(records, a),
                                               ChainOf(records, b), BlocksOf(records, b));
  MergeOutcome out;
  for (const std::int32_t tag : MergedTags(merged, ChainOf(records, a), ChainOf(records, b))) {
    out.sequence.push_back(tag);
  }
  const EdgeId last = info.edges[position];
  out.sequence.push_back(last);
  out.value = merged.objective +
              info.total_length * CrossingWeight(catalog, pair_weight, subtree, position);
  return out;
}

TreeDp::TreeDp(const Instance& instance, const TreeSolverOptions& options) {
  const Network& tree = instance.network();
  if (!tree.is_tree()) {
    throw InvalidInstanceError("tree solver requires a tree network");
  }
  if (instance.objective() != Objective::kWeightedSum) {
    throw UnsupportedError("tree solver supports only the wct objective");
  }
  if (tree.leaf_count() > options.max_leaves && !options.force) {
    throw GuardExceededError("tree has " + std::to_string(tree.leaf_count()) +
                             " leaves, above the guard of " +
                             std::to_string(options.max_leaves) +
                             "; work grows like n^(leaves+2)");
  }

  catalog_ = EnumerateSubtrees(tree, options.threads);
  pair_weight_ = PairWeightTables(tree, instance.pairs(), catalog_);
  records_.resize(static_cast<size_t>(catalog_.size()));

  for (int p = 1; p <= catalog_.max_edges(); ++p) {
    const auto begin = static_cast<size_t>(catalog_.level_begin(p));
    const auto end = static_cast<size_t>(catalog_.level_begin(p + 1));
    // Records of smaller subtrees are read-only while level p is filled.
    internal::ParallelFor(begin, end, options.threads, [&](size_t idx) {
      const SubtreeInfo& info = catalog_.at(static_cast<int>(idx));
      size_t best_pos = 0;
      std::int64_t best_value = 0;
      for (size_t k = 0; k < info.edges.size(); ++k) {
        const auto [a, b] = info.split[k];
        const std::int64_t value =
            MergeObjective(BlocksOf(records_, a), BlocksOf(records_, b)) +
            info.total_length *
                CrossingWeight(catalog_, pair_weight_, static_cast<int>(idx), k);
        // edges are ascending, so strict improvement keeps the lowest id on ties.
        if (k == 0 || value < best_value) {
          best_value = value;
          best_pos = k;
        }
      }

      const auto [a, b] = info.split[best_pos];
      const auto first = ChainOf(records_, a);
      const auto second = ChainOf(records_, b);
      const MergedSchedule merged =
          MergeTwoChains(first, BlocksOf(records_, a), second, BlocksOf(records_, b));
      SubtreeRecord& rec = records_[idx];
      rec.chain.reserve(info.edges.size());
      for (const JobRef& ref : merged.order) {
        rec.chain.push_back(ref.chain == 0 ? first[ref.index] : second[ref.index]);
      }
      const EdgeId last = info.edges[best_pos];
      rec.chain.push_back(
          {tree.edge(last).length,
           CrossingWeight(catalog_, pair_weight_, static_cast<int>(idx), best_pos), last});
      rec.blocks = DensityDecomposition(rec.chain);
      rec.best_value = best_value;
    });
  }
}

TreeSolution SolveTree(const Instance& instance, const TreeSolverOptions& options) {
  const TreeDp dp(instance, options);
  TreeSolution out;
  out.sequence = dp.root().sequence();
  out.report = EvaluateSequence(instance, out.sequence);
  if (out.report.objective != dp.root().best_value) {
    throw std::logic_error("tree DP value " + std::to_string(dp.root().best_value) +
                           " disagrees with evaluator " +
                           std::to_string(out.report.objective));
  }
  return out;
}

}  // namespace netcon
