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

#include "netcon/metric_solver.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "netcon/union_find.h"
#include "parallel.h"

namespace netcon {
namespace {

using LabelPair = std::pair<int, int>;

struct PathCheck {
  std::optional<std::string> error;
  std::vector<std::vector<int>> paths;
  std::vector<char> used;
};

// Forest paths between label pairs over `vertex_count` labels. Reports a
// cycle or a disconnected pair as an error; unused edges are only flagged.
PathCheck ForestPaths(int vertex_count, const std::vector<LabelPair>& edges,
                      const std::vector<LabelPair>& pairs) {
  PathCheck out;
  UnionFind uf(vertex_count);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(vertex_count));
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (!uf.Union(a, b)) {
      out.error = "edges contain a cycle";
      return out;
    }
    adj[static_cast<size_t>(a)].emplace_back(b, static_cast<int>(i));
    adj[static_cast<size_t>(b)].emplace_back(a, static_cast<int>(i));
  }
  out.used.assign(edges.size(), 0);
  std::vector<int> via(static_cast<size_t>(vertex_count));
  std::vector<int> from(static_cast<size_t>(vertex_count));
  for (const auto& [a, b] : pairs) {
    if (!uf.Connected(a, b)) {
      out.error = "a relevant pair is not connected";
      return out;
    }
    std::fill(via.begin(), via.end(), -2);
    via[static_cast<size_t>(a)] = -1;
    std::vector<int> stack = {a};
    while (!stack.empty() && via[static_cast<size_t>(b)] == -2) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [y, e] : adj[static_cast<size_t>(x)]) {
        if (via[static_cast<size_t>(y)] != -2) continue;
        via[static_cast<size_t>(y)] = e;
        from[static_cast<size_t>(y)] = x;
        stack.push_back(y);
      }
    }
    std::vector<int> path;
    for (int x = b; x != a; x = from[static_cast<size_t>(x)]) {
      path.push_back(via[static_cast<size_t>(x)]);
      out.used[static_cast<size_t>(via[static_cast<size_t>(x)])] = 1;
    }
    std::reverse(path.begin(), path.end());
    out.paths.push_back(std::move(path));
  }
  return out;
}

// Compresses the vertex ids used by edges and pairs into dense labels.
struct Relabel {
  std::map<VertexId, int> label;
  int Get(VertexId v) {
    return label.emplace(v, static_cast<int>(label.size())).first->second;
  }
};

PathCheck CheckForest(const std::vector<ForestEdge>& edges, const Instance& instance) {
  Relabel rl;
  std::vector<LabelPair> le;
  std::vector<LabelPair> lp;
  for (const auto& e : edges) le.emplace_back(rl.Get(e.u), rl.Get(e.v));
  for (const auto& p : instance.pairs()) lp.emplace_back(rl.Get(p.u), rl.Get(p.v));
  return ForestPaths(static_cast<int>(rl.label.size()), le, lp);
}

void SortEdges(std::vector<ForestEdge>& edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const ForestEdge& a, const ForestEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
}

// Path-by-path construction for every pair order.
ForestEvaluation EvaluatePaths(const std::vector<std::vector<int>>& paths,
                               const std::vector<std::int64_t>& lengths,
                               const Instance& instance) {
  const size_t r = paths.size();
  std::vector<int> pair_order(r);
  std::iota(pair_order.begin(), pair_order.end(), 0);
  std::vector<char> built(lengths.size());
  std::vector<std::int64_t> times(r);
  std::vector<int> order;

  ForestEvaluation best;
  bool have = false;
  do {
    std::fill(built.begin(), built.end(), 0);
    order.clear();
    std::int64_t clock = 0;
    for (const int i : pair_order) {
      for (const int e : paths[static_cast<size_t>(i)]) {
        if (built[static_cast<size_t>(e)]) continue;
        built[static_cast<size_t>(e)] = 1;
        clock += lengths[static_cast<size_t>(e)];
        order.push_back(e);
      }
      times[static_cast<size_t>(i)] = clock;
    }
    const std::int64_t value = ObjectiveValue(instance, times);
    if (!have || value < best.value) {
      have = true;
      best.value = value;
      best.order = order;
      best.pair_order = pair_order;
      best.times = times;
    }
  } while (std::next_permutation(pair_order.begin(), pair_order.end()));
  return best;
}

// Value only; same semantics as EvaluatePaths.
std::int64_t BestPathValue(const std::vector<std::vector<int>>& paths,
                           const std::vector<std::int64_t>& lengths,
                           const Instance& instance, std::vector<int>& pair_order,
                           std::vector<std::int64_t>& times) {
  const size_t r = paths.size();
  pair_order.resize(r);
  std::iota(pair_order.begin(), pair_order.end(), 0);
  times.resize(r);
  std::int64_t best = 0;
  bool have = false;
  do {
    std::uint64_t built = 0;
    std::int64_t clock = 0;
    for (const int i : pair_order) {
      for (const int e : paths[static_cast<size_t>(i)]) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (built & bit) continue;
        built |= bit;
        clock += lengths[static_cast<size_t>(e)];
      }
      times[static_cast<size_t>(i)] = clock;
    }
    const std::int64_t value = ObjectiveValue(instance, times);
    if (!have || value < best) {
      have = true;
      best = value;
    }
  } while (std::next_permutation(pair_order.begin(), pair_order.end()));
  return best;
}

// --- Topology generation --------------------------------------------------

// Calls visit(seq) for every Pruefer sequence over `vertex_count` vertices in
// which each vertex flagged in `steiner` appears at least twice (degree >= 3).
void ForEachPruefer(int vertex_count, const std::vector<char>& steiner,
                    const std::function<void(const std::vector<int>&)>& visit) {
  const int len = vertex_count - 2;
  std::vector<int> seq(static_cast<size_t>(std::max(len, 0)));
  std::vector<int> count(static_cast<size_t>(vertex_count), 0);
  int deficit = 0;
  for (const char s : steiner) deficit += s ? 2 : 0;
  if (deficit > std::max(len, 0)) return;

  std::function<void(int)> fill = [&](int pos) {
    if (pos == len) {
      visit(seq);
      return;
    }
    for (int v = 0; v < vertex_count; ++v) {
      const bool helps = steiner[static_cast<size_t>(v)] && count[static_cast<size_t>(v)] < 2;
      const int next_deficit = deficit - (helps ? 1 : 0);
      if (next_deficit > len - pos - 1) continue;
      seq[static_cast<size_t>(pos)] = v;
      ++count[static_cast<size_t>(v)];
      deficit = next_deficit;
      fill(pos + 1);
      deficit += helps ? 1 : 0;
      --count[static_cast<size_t>(v)];
    }
  };
  fill(0);
}

std::vector<LabelPair> DecodePruefer(int vertex_count, const std::vector<int>& seq) {
  std::vector<int> degree(static_cast<size_t>(vertex_count), 1);
  for (const int x : seq) ++degree[static_cast<size_t>(x)];
  std::vector<LabelPair> edges;
  for (const int x : seq) {
    int leaf = 0;
    while (degree[static_cast<size_t>(leaf)] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[static_cast<size_t>(leaf)];
    --degree[static_cast<size_t>(x)];
  }
  int a = -1;
  for (int v = 0; v < vertex_count; ++v) {
    if (degree[static_cast<size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
      }
    }
  }
  return edges;
}

// Trees over one component's labels in which Steiner labels have degree >= 3
// and every edge lies on the path of one of the component's pairs.
std::vector<std::vector<LabelPair>> ComponentTrees(const std::vector<int>& labels,
                                                   const std::vector<char>& steiner,
                                                   const std::vector<LabelPair>& pairs) {
  const int vc = static_cast<int>(labels.size());
  std::map<int, int> local;
  for (int i = 0; i < vc; ++i) local[labels[static_cast<size_t>(i)]] = i;
  std::vector<LabelPair> local_pairs;
  for (const auto& [a, b] : pairs) local_pairs.emplace_back(local.at(a), local.at(b));

  std::vector<std::vector<LabelPair>> out;
  auto accept = [&](const std::vector<LabelPair>& edges) {
    const PathCheck check = ForestPaths(vc, edges, local_pairs);
    if (check.error) return;
    if (std::find(check.used.begin(), check.used.end(), 0) != check.used.end()) return;
    std::vector<LabelPair> mapped;
    for (const auto& [a, b] : edges) {
      const int x = labels[static_cast<size_t>(a)];
      const int y = labels[static_cast<size_t>(b)];
      mapped.emplace_back(std::min(x, y), std::max(x, y));
    }
    out.push_back(std::move(mapped));
  };
  if (vc == 2) {
    if (!steiner[0] && !steiner[1]) accept({{0, 1}});
    return out;
  }
  ForEachPruefer(vc, steiner, [&](const std::vector<int>& seq) {
    accept(DecodePruefer(vc, seq));
  });
  return out;
}

std::vector<ForestTopology> BuildTopologies(int terminal_count,
                                            const std::vector<LabelPair>& pairs,
                                            int steiner_count) {
  const int total = terminal_count + steiner_count;

  // Terminal classes: terminals joined through pairs must share a component.
  UnionFind uf(terminal_count);
  for (const auto& [a, b] : pairs) uf.Union(a, b);
  std::vector<int> class_of(static_cast<size_t>(terminal_count), -1);
  std::vector<std::vector<int>> classes;
  for (int t = 0; t < terminal_count; ++t) {
    const int root = uf.Find(t);
    if (class_of[static_cast<size_t>(root)] < 0) {
      class_of[static_cast<size_t>(root)] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<size_t>(class_of[static_cast<size_t>(root)])].push_back(t);
  }
  const int q = static_cast<int>(classes.size());

  std::vector<ForestTopology> out;
  std::vector<int> rg(static_cast<size_t>(q), 0);  // restricted growth string
  std::function<void(int, int)> partitions = [&](int pos, int blocks) {
    if (pos < q) {
      for (int b = 0; b <= blocks; ++b) {
        if (pos == 0 && b > 0) break;
        rg[static_cast<size_t>(pos)] = b;
        partitions(pos + 1, std::max(blocks, b + 1));
      }
      return;
    }
    // Assign each Steiner label to a block.
    std::vector<int> assign(static_cast<size_t>(steiner_count), 0);
    while (true) {
      std::vector<std::vector<int>> block_labels(static_cast<size_t>(blocks));
      for (int t = 0; t < terminal_count; ++t) {
        const int c = class_of[static_cast<size_t>(uf.Find(t))];
        block_labels[static_cast<size_t>(rg[static_cast<size_t>(c)])].push_back(t);
      }
      for (int s = 0; s < steiner_count; ++s) {
        block_labels[static_cast<size_t>(assign[static_cast<size_t>(s)])].push_back(
            terminal_count + s);
      }
      std::vector<std::vector<std::vector<LabelPair>>> per_block;
      bool feasible = true;
      for (int b = 0; b < blocks && feasible; ++b) {
        const auto& labels = block_labels[static_cast<size_t>(b)];
        std::vector<char> steiner;
        for (const int l : labels) steiner.push_back(l >= terminal_count ? 1 : 0);
        std::vector<LabelPair> block_pairs;
        for (const auto& [x, y] : pairs) {
          if (rg[static_cast<size_t>(class_of[static_cast<size_t>(uf.Find(x))])] == b) {
            block_pairs.emplace_back(x, y);
          }
        }
        per_block.push_back(ComponentTrees(labels, steiner, block_pairs));
        feasible = !per_block.back().empty();
      }
      if (feasible) {
        // Cartesian product of the per-block trees.
        std::vector<size_t> pick(per_block.size(), 0);
        while (true) {
          std::vector<LabelPair> edges;
          for (size_t b = 0; b < per_block.size(); ++b) {
            const auto& tree = per_block[b][pick[b]];
            edges.insert(edges.end(), tree.begin(), tree.end());
          }
          std::sort(edges.begin(), edges.end());
          PathCheck check = ForestPaths(total, edges, pairs);
          if (!check.error) out.push_back({std::move(edges), std::move(check.paths)});
          size_t b = 0;
          while (b < pick.size() && ++pick[b] == per_block[b].size()) pick[b++] = 0;
          if (b == pick.size()) break;
        }
      }
      int s = 0;
      while (s < steiner_count && ++assign[static_cast<size_t>(s)] == blocks) {
        assign[static_cast<size_t>(s++)] = 0;
      }
      if (s == steiner_count) break;
    }
  };
  if (q > 0) partitions(0, 0);
  return out;
}

// Candidate instantiated on concrete vertices: labels -> vertices.
struct Candidate {
  std::int64_t value = 0;
  int steiner = -1;
  int topology = -1;
  std::vector<VertexId> vertex_of;
};

std::vector<std::pair<VertexId, VertexId>> EncodingOf(const ForestTopology& topo,
                                                      const std::vector<VertexId>& vertex_of) {
  std::vector<std::pair<VertexId, VertexId>> enc;
  enc.reserve(topo.edges.size());
  for (const auto& [a, b] : topo.edges) {
    const VertexId x = vertex_of[static_cast<size_t>(a)];
    const VertexId y = vertex_of[static_cast<size_t>(b)];
    enc.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(enc.begin(), enc.end());
  return enc;
}

// Calls fn(vertex_of) for every Steiner subset of size k whose smallest
// element is non_terminals[first] (all subsets when k == 0 and first == 0).
template <typename Fn>
void ForEachSubset(const CandidateSpace& space, int k, size_t first, Fn&& fn) {
  const auto& terms = space.terminals();
  const auto& pool = space.non_terminals();
  std::vector<VertexId> vertex_of(terms.begin(), terms.end());
  if (k == 0) {
    fn(vertex_of);
    return;
  }
  vertex_of.push_back(pool[first]);
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      fn(vertex_of);
      return;
    }
    for (size_t i = start; i + static_cast<size_t>(left) <= pool.size(); ++i) {
      vertex_of.push_back(pool[i]);
      rec(i + 1, left - 1);
      vertex_of.pop_back();
    }
  };
  rec(first + 1, k - 1);
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> RForest::Encoding() const {
  std::vector<std::pair<VertexId, VertexId>> enc;
  for (const auto& e : edges) enc.emplace_back(e.u, e.v);
  std::sort(enc.begin(), enc.end());
  return enc;
}

std::optional<std::string> RForestViolation(const std::vector<ForestEdge>& edges,
                                            const Instance& instance) {
  std::vector<ForestEdge> sorted = edges;
  SortEdges(sorted);
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i - 1].u && sorted[i].v == sorted[i - 1].v) {
      return "duplicate edge";
    }
  }
  for (const auto& e : sorted) {
    if (e.u == e.v) return "self-loop";
  }
  const PathCheck check = CheckForest(sorted, instance);
  if (check.error) return check.error;
  if (std::find(check.used.begin(), check.used.end(), 0) != check.used.end()) {
    return "an edge lies on no pair path";
  }
  return std::nullopt;
}

RForest MakeRForest(ForestHost host, std::vector<ForestEdge> edges,
                    const Instance& instance) {
  SortEdges(edges);
  if (auto why = RForestViolation(edges, instance)) {
    throw InvalidInstanceError("not an r-forest: " + *why);
  }
  RForest forest;
  forest.host = host;
  forest.pair_paths = CheckForest(edges, instance).paths;
  forest.edges = std::move(edges);
  return forest;
}

ForestEvaluation EvaluateRForest(const RForest& forest, const Instance& instance) {
  std::vector<std::int64_t> lengths;
  for (const auto& e : forest.edges) lengths.push_back(e.length);
  return EvaluatePaths(forest.pair_paths, lengths, instance);
}

BuildSequence ForestSequence(const RForest& forest, const std::vector<int>& order) {
  BuildSequence seq;
  for (const int i : order) seq.push_back(forest.edges[static_cast<size_t>(i)].id);
  return seq;
}

CandidateSpace::CandidateSpace(const Instance& instance, const FixedROptions& options) {
  const int r = instance.pair_count();
  const int guard = options.depot_mode ? options.max_pairs_depot : options.max_pairs;
  if (r > guard && !options.force) {
    throw GuardExceededError(std::to_string(r) + " relevant pairs exceed the guard of " +
                             std::to_string(guard) +
                             "; candidate count grows like n^(2r-2)");
  }
  if (options.depot_mode && !instance.common_vertex()) {
    throw InvalidInstanceError("depot mode requires all pairs to share a vertex");
  }
  // Forest edge sets are tracked as 64-bit masks (at most 4r - 3 edges).
  if (r > 16) throw GuardExceededError("at most 16 relevant pairs are supported");

  for (const auto& p : instance.pairs()) {
    terminals_.push_back(p.u);
    terminals_.push_back(p.v);
  }
  std::sort(terminals_.begin(), terminals_.end());
  terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
  for (VertexId v = 0; v < instance.network().vertex_count(); ++v) {
    if (!std::binary_search(terminals_.begin(), terminals_.end(), v)) {
      non_terminals_.push_back(v);
    }
  }

  std::vector<LabelPair> label_pairs;
  for (const auto& p : instance.pairs()) {
    const auto label = [&](VertexId v) {
      return static_cast<int>(std::lower_bound(terminals_.begin(), terminals_.end(), v) -
                              terminals_.begin());
    };
    label_pairs.emplace_back(label(p.u), label(p.v));
  }
  const int bound = options.depot_mode ? r - 1 : 2 * r - 2;
  const int max_k = std::min(bound, static_cast<int>(non_terminals_.size()));
  for (int k = 0; k <= max_k; ++k) {
    by_steiner_.push_back(
        BuildTopologies(static_cast<int>(terminals_.size()), label_pairs, k));
  }
}

std::vector<RForest> EnumerateCandidateForests(const Instance& instance,
                                               const MetricClosure& closure,
                                               const FixedROptions& options) {
  const CandidateSpace space(instance, options);
  std::vector<RForest> out;
  for (int k = 0; k <= space.max_steiner(); ++k) {
    const size_t units = k == 0 ? 1 : space.non_terminals().size();
    for (size_t first = 0; first < units; ++first) {
      ForEachSubset(space, k, first, [&](const std::vector<VertexId>& vertex_of) {
        for (const ForestTopology& topo : space.topologies(k)) {
          std::vector<ForestEdge> edges;
          for (const auto& [a, b] : topo.edges) {
            const VertexId x = vertex_of[static_cast<size_t>(a)];
            const VertexId y = vertex_of[static_cast<size_t>(b)];
            edges.push_back({x, y, closure.dist(x, y), -1});
          }
          out.push_back(MakeRForest(ForestHost::kMetricClosure, std::move(edges), instance));
        }
      });
    }
  }
  return out;
}

ProjectedForest ProjectToGraph(const RForest& closure_forest, const std::vector<int>& order,
                               const MetricClosure& closure, const Instance& instance) {
  const Network& net = instance.network();
  UnionFind uf(net.vertex_count());
  ProjectedForest out;
  for (const int i : order) {
    const ForestEdge& me = closure_forest.edges[static_cast<size_t>(i)];
    for (const EdgeId id : closure.ExtractPath(me.u, me.v)) {
      const Edge& e = net.edge(id);
      // An edge whose endpoints are already joined would close a cycle.
      if (uf.Union(e.u, e.v)) out.added.push_back(id);
    }
  }

  std::vector<ForestEdge> edges;
  for (const EdgeId id : out.added) {
    const Edge& e = net.edge(id);
    edges.push_back({e.u, e.v, e.length, id});
  }
  const PathCheck check = CheckForest(edges, instance);
  if (check.error) throw std::logic_error("projection failed: " + *check.error);
  std::vector<ForestEdge> kept;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (check.used[i]) {
      kept.push_back(edges[i]);
    } else {
      ++out.pruned;
    }
  }
  out.forest = MakeRForest(ForestHost::kOriginalGraph, std::move(kept), instance);
  out.evaluation = EvaluateRForest(out.forest, instance);
  return out;
}

FixedRSolution SolveFixedR(const Instance& instance, const FixedROptions& options) {
  const CandidateSpace space(instance, options);
  const MetricClosure closure(instance.network());

  // Work units: (k, smallest Steiner vertex). Each keeps its own best; the
  // reduction below uses the same total order, so the result does not depend
  // on scheduling.
  std::vector<std::pair<int, size_t>> units;
  for (int k = 0; k <= space.max_steiner(); ++k) {
    const size_t count = k == 0 ? 1 : space.non_terminals().size();
    for (size_t first = 0; first < count; ++first) units.emplace_back(k, first);
  }

  auto better = [&](const Candidate& a, const Candidate& b) {
    if (b.topology < 0) return true;
    if (a.value != b.value) return a.value < b.value;
    const auto& ta = space.topologies(a.steiner)[static_cast<size_t>(a.topology)];
    const auto& tb = space.topologies(b.steiner)[static_cast<size_t>(b.topology)];
    return EncodingOf(ta, a.vertex_of) < EncodingOf(tb, b.vertex_of);
  };

  std::vector<Candidate> unit_best(units.size());
  std::vector<std::int64_t> unit_count(units.size(), 0);
  internal::ParallelFor(0, units.size(), options.threads, [&](size_t u) {
    const auto [k, first] = units[u];
    const auto& topologies = space.topologies(k);
    std::vector<std::int64_t> lengths;
    std::vector<int> pair_order;
    std::vector<std::int64_t> times;
    Candidate& best = unit_best[u];
    ForEachSubset(space, k, first, [&](const std::vector<VertexId>& vertex_of) {
      for (size_t t = 0; t < topologies.size(); ++t) {
        const ForestTopology& topo = topologies[t];
        lengths.clear();
        for (const auto& [a, b] : topo.edges) {
          lengths.push_back(closure.dist(vertex_of[static_cast<size_t>(a)],
                                         vertex_of[static_cast<size_t>(b)]));
        }
        const std::int64_t value =
            BestPathValue(topo.pair_paths, lengths, instance, pair_order, times);
        const bool take =
            best.topology < 0 || value < best.value ||
            (value == best.value &&
             EncodingOf(topo, vertex_of) <
                 EncodingOf(space.topologies(best.steiner)[static_cast<size_t>(best.topology)],
                            best.vertex_of));
        if (take) best = Candidate{value, k, static_cast<int>(t), vertex_of};
        ++unit_count[u];
      }
    });
  });

  Candidate best;
  FixedRSolution out;
  for (size_t u = 0; u < units.size(); ++u) {
    out.candidates += unit_count[u];
    if (unit_best[u].topology >= 0 && better(unit_best[u], best)) best = unit_best[u];
  }
  if (best.topology < 0) throw std::logic_error("no candidate forest found");

  const ForestTopology& topo =
      space.topologies(best.steiner)[static_cast<size_t>(best.topology)];
  std::vector<ForestEdge> edges;
  for (const auto& [a, b] : topo.edges) {
    const VertexId x = best.vertex_of[static_cast<size_t>(a)];
    const VertexId y = best.vertex_of[static_cast<size_t>(b)];
    edges.push_back({x, y, closure.dist(x, y), -1});
  }
  out.metric_forest = MakeRForest(ForestHost::kMetricClosure, std::move(edges), instance);
  out.metric_evaluation = EvaluateRForest(out.metric_forest, instance);
  out.projected =
      ProjectToGraph(out.metric_forest, out.metric_evaluation.order, closure, instance);

  const std::int64_t metric_value = out.metric_evaluation.value;
  const std::int64_t projected_value = out.projected.evaluation.value;
  if (metric_value != best.value || projected_value != metric_value) {
    throw std::logic_error("closure value " + std::to_string(metric_value) +
                           " and projected value " + std::to_string(projected_value) +
                           " disagree");
  }

  out.sequence = ForestSequence(out.projected.forest, out.projected.evaluation.order);
  std::vector<char> in_seq(static_cast<size_t>(instance.network().edge_count()), 0);
  for (const EdgeId id : out.sequence) in_seq[static_cast<size_t>(id)] = 1;
  for (EdgeId id = 0; id < instance.network().edge_count(); ++id) {
    if (!in_seq[static_cast<size_t>(id)]) out.sequence.push_back(id);
  }
  out.report = EvaluateSequence(instance, out.sequence);
  if (out.report.objective != projected_value) {
    throw std::logic_error("evaluator disagrees with the forest value");
  }
  return out;
}

}  // namespace netcon
