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

// Instance data model for the network construction scheduling problem.
//
// A network is built one edge at a time at unit speed: building edge e takes
// c_e time units and no two edges are built simultaneously. A relevant pair
// {u, v} is connected at the completion time of the first edge that joins u
// and v in the constructed subnetwork. The solvers choose the construction
// order minimizing either the total weighted connection time or the maximum
// lateness of the connection times with respect to per-pair due dates.

#ifndef NETCON_INSTANCE_H_
#define NETCON_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netcon {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An Instance (or one of its parts) violates a model invariant.
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

// A solver or oracle was asked to run beyond its configured size guard.
class GuardExceededError : public Error {
 public:
  using Error::Error;
};

// A solver does not support the requested instance class or objective.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::int64_t length = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected, connected, simple network with positive integer edge lengths.
// Endpoints are stored with u < v. Edge ids are positions in edges().
class Network {
 public:
  Network() = default;
  // Throws InvalidInstanceError unless the result is connected, simple and
  // has lengths >= 1.
  Network(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<size_t>(id)]; }

  // Incident edge ids per vertex, in ascending edge id order.
  const std::vector<EdgeId>& incident(VertexId v) const {
    return incident_[static_cast<size_t>(v)];
  }
  // Edge id joining a and b, if any.
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  bool is_tree() const { return edge_count() == vertex_count_ - 1; }
  // Number of degree-1 vertices.
  int leaf_count() const;
  std::int64_t total_length() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

struct RelevantPair {
  VertexId u = 0;
  VertexId v = 0;
  std::int64_t weight = 1;
  std::optional<std::int64_t> due;

  friend bool operator==(const RelevantPair&, const RelevantPair&) = default;
};

enum class Objective { kWeightedSum, kMaxLateness };

const char* ObjectiveName(Objective objective);

class Instance {
 public:
  Instance() = default;
  // Validates pairs against the network; pair endpoints are normalized so
  // that u < v. Throws InvalidInstanceError.
  Instance(Network network, std::vector<RelevantPair> pairs,
           Objective objective = Objective::kWeightedSum);

  const Network& network() const { return network_; }
  const std::vector<RelevantPair>& pairs() const { return pairs_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  Objective objective() const { return objective_; }

  // Returns the vertex shared by every pair, if one exists. Ties resolve to
  // the smallest such vertex.
  std::optional<VertexId> common_vertex() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Network network_;
  std::vector<RelevantPair> pairs_;
  Objective objective_ = Objective::kWeightedSum;
};

}  // namespace netcon

#endif  // NETCON_INSTANCE_H_
