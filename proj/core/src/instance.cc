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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace netcon {
namespace {

std::string EdgeLabel(const Edge& e) {
  return "edge " + std::to_string(e.u) + " " + std::to_string(e.v);
}

}  // namespace

const char* ObjectiveName(Objective objective) {
  switch (objective) {
    case Objective::kWeightedSum:
      return "wct";
    case Objective::kMaxLateness:
      return "maxlat";
  }
  return "unknown";
}

Network::Network(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) {
    throw InvalidInstanceError("vertex count must be positive");
  }
  incident_.assign(static_cast<size_t>(vertex_count_), {});
  std::set<std::pair<VertexId, VertexId>> seen;
  for (size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InvalidInstanceError(EdgeLabel(e) + ": vertex id out of range");
    }
    if (e.u == e.v) {
      throw InvalidInstanceError(EdgeLabel(e) + ": self-loop");
    }
    if (e.length < 1) {
      throw InvalidInstanceError(EdgeLabel(e) + ": length must be >= 1");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw InvalidInstanceError(EdgeLabel(e) + ": duplicate edge");
    }
    incident_[static_cast<size_t>(e.u)].push_back(static_cast<EdgeId>(i));
    incident_[static_cast<size_t>(e.v)].push_back(static_cast<EdgeId>(i));
  }

  // Connectivity by DFS from vertex 0.
  std::vector<char> reached(static_cast<size_t>(vertex_count_), 0);
  std::vector<VertexId> stack = {0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId id : incident(x)) {
      const Edge& e = edge(id);
      const VertexId y = e.u == x ? e.v : e.u;
      if (!reached[static_cast<size_t>(y)]) {
        reached[static_cast<size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  if (count != vertex_count_) {
    throw InvalidInstanceError("network is disconnected");
  }
}

std::optional<EdgeId> Network::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || a >= vertex_count_) return std::nullopt;
  for (EdgeId id : incident(a)) {
    const Edge& e = edge(id);
    if ((e.u == a && e.v == b) || (e.v == a && e.u == b)) return id;
  }
  return std::nullopt;
}

int Network::leaf_count() const {
  int leaves = 0;
  for (const auto& inc : incident_) leaves += inc.size() == 1 ? 1 : 0;
  return leaves;
}

std::int64_t Network::total_length() const {
  return std::accumulate(
      edges_.begin(), edges_.end(), std::int64_t{0},
      [](std::int64_t acc, const Edge& e) { return acc + e.length; });
}

Instance::Instance(Network network, std::vector<RelevantPair> pairs,
                   Objective objective)
    : network_(std::move(network)),
      pairs_(std::move(pairs)),
      objective_(objective) {
  if (pairs_.empty()) {
    throw InvalidInstanceError("instance has no relevant pairs");
  }
  const int n = network_.vertex_count();
  std::set<std::pair<VertexId, VertexId>> seen;
  for (RelevantPair& p : pairs_) {
    const std::string label =
        "pair " + std::to_string(p.u) + " " + std::to_string(p.v);
    if (p.u < 0 || p.v < 0 || p.u >= n || p.v >= n) {
      throw InvalidInstanceError(label + ": vertex id out of range");
    }
    if (p.u == p.v) {
      throw InvalidInstanceError(label + ": endpoints must differ");
    }
    if (p.weight <= 0) {
      throw InvalidInstanceError(label + ": weight must be positive");
    }
    if (objective_ == Objective::kMaxLateness && !p.due.has_value()) {
      throw InvalidInstanceError(label + ": due date required for maxlat");
    }
    if (p.u > p.v) std::swap(p.u, p.v);
    if (!seen.emplace(p.u, p.v).second) {
      throw InvalidInstanceError(label + ": duplicate pair");
    }
  }
}

std::optional<VertexId> Instance::common_vertex() const {
  std::optional<VertexId> best;
  for (VertexId cand : {pairs_.front().u, pairs_.front().v}) {
    const bool shared =
        std::all_of(pairs_.begin(), pairs_.end(), [cand](const auto& p) {
          return p.u == cand || p.v == cand;
        });
    if (shared && (!best || cand < *best)) best = cand;
  }
  return best;
}

}  // namespace netcon
