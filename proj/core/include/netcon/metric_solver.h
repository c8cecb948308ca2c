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

// Exact solver for general networks with a small number r of relevant pairs.
//
// Some optimal schedule builds an r-forest first: an acyclic edge set that
// connects every pair and in which every edge lies on some pair's forest
// path. Replacing each maximal path between significant vertices (pair
// endpoints and non-terminal vertices of forest degree >= 3) by one edge of
// the metric closure loses nothing, and such closure forests have at most
// 2r - 2 non-terminal vertices (r - 1 when all pairs share a vertex). The
// solver scores every such closure forest under all r! pair orders, keeps the
// best, and maps it back onto shortest paths of the original network.

#ifndef NETCON_METRIC_SOLVER_H_
#define NETCON_METRIC_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcon/evaluator.h"
#include "netcon/instance.h"
#include "netcon/metric_closure.h"

namespace netcon {

enum class ForestHost { kOriginalGraph, kMetricClosure };

struct ForestEdge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  std::int64_t length = 0;
  EdgeId id = -1;  // original edge id; -1 on the metric closure

  friend bool operator==(const ForestEdge&, const ForestEdge&) = default;
};

struct RForest {
  ForestHost host = ForestHost::kMetricClosure;
  // Sorted by (u, v).
  std::vector<ForestEdge> edges;
  // pair_paths[i]: indices into edges along the forest path of pair i.
  std::vector<std::vector<int>> pair_paths;

  // Sorted (u, v) list; candidate ties are broken by its lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> Encoding() const;
};

// Reason the edges do not form an r-forest for the instance's pairs, or
// nullopt if they do.
std::optional<std::string> RForestViolation(const std::vector<ForestEdge>& edges,
                                            const Instance& instance);

// Sorts the edges, checks the r-forest properties and fills pair_paths.
// Throws InvalidInstanceError when a property fails.
RForest MakeRForest(ForestHost host, std::vector<ForestEdge> edges,
                    const Instance& instance);

struct ForestEvaluation {
  std::int64_t value = 0;
  // Build order as indices into RForest::edges.
  std::vector<int> order;
  // Pair order whose path-by-path construction achieves `value`.
  std::vector<int> pair_order;
  // Charged connection time per pair (end of its path block).
  std::vector<std::int64_t> times;
};

// Best path-by-path schedule over all r! pair orders. Ties keep the
// lexicographically first pair order.
ForestEvaluation EvaluateRForest(const RForest& forest, const Instance& instance);

// Original edge ids of `order` for a forest hosted on the original network.
BuildSequence ForestSequence(const RForest& forest, const std::vector<int>& order);

struct FixedROptions {
  bool depot_mode = false;
  int max_pairs = 4;
  int max_pairs_depot = 6;
  bool force = false;
  int threads = 1;
};

// Abstract forest over labels: terminals are 0..t-1 in ascending vertex
// order, Steiner slots are t..t+k-1 and map to a sorted vertex subset.
struct ForestTopology {
  std::vector<std::pair<int, int>> edges;  // label pairs, a < b, sorted
  std::vector<std::vector<int>> pair_paths;
};

// Labelled topologies for every admissible Steiner count.
class CandidateSpace {
 public:
  // Throws GuardExceededError / InvalidInstanceError per the options.
  CandidateSpace(const Instance& instance, const FixedROptions& options);

  const std::vector<VertexId>& terminals() const { return terminals_; }
  const std::vector<VertexId>& non_terminals() const { return non_terminals_; }
  int max_steiner() const { return static_cast<int>(by_steiner_.size()) - 1; }
  const std::vector<ForestTopology>& topologies(int steiner) const {
    return by_steiner_[static_cast<size_t>(steiner)];
  }

 private:
  std::vector<VertexId> terminals_;
  std::vector<VertexId> non_terminals_;
  std::vector<std::vector<ForestTopology>> by_steiner_;
};

// Every candidate closure forest, in canonical order: Steiner subsets by size
// then lexicographically, topologies in generation order.
std::vector<RForest> EnumerateCandidateForests(const Instance& instance,
                                               const MetricClosure& closure,
                                               const FixedROptions& options = {});

struct ProjectedForest {
  RForest forest;  // hosted on the original network
  ForestEvaluation evaluation;
  // Original edges in the order they were added, before pruning.
  BuildSequence added;
  int pruned = 0;
};

// Replaces closure edges, in `order`, by stored shortest paths, skipping any
// original edge whose endpoints are already connected. Edges left on no pair
// path are pruned before the forest is re-evaluated.
ProjectedForest ProjectToGraph(const RForest& closure_forest, const std::vector<int>& order,
                               const MetricClosure& closure, const Instance& instance);

struct FixedRSolution {
  BuildSequence sequence;  // full schedule: essential edges first
  ConnectionReport report;
  RForest metric_forest;
  ForestEvaluation metric_evaluation;
  ProjectedForest projected;
  std::int64_t candidates = 0;
};

// Throws GuardExceededError when r is above the guard, InvalidInstanceError
// when depot mode is requested without a common vertex.
FixedRSolution SolveFixedR(const Instance& instance, const FixedROptions& options = {});

}  // namespace netcon

#endif  // NETCON_METRIC_SOLVER_H_
