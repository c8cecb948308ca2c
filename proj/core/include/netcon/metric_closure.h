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

#ifndef NETCON_METRIC_CLOSURE_H_
#define NETCON_METRIC_CLOSURE_H_

#include <cstdint>
#include <vector>

#include "netcon/instance.h"

namespace netcon {

// All-pairs shortest paths of a network (Floyd-Warshall) with next-hop data
// for path reconstruction.
class MetricClosure {
 public:
  explicit MetricClosure(const Network& network);

  int vertex_count() const { return n_; }
  std::int64_t dist(VertexId a, VertexId b) const { return dist_[Index(a, b)]; }
  // First vertex after `a` on the stored shortest a-b path.
  VertexId next_hop(VertexId a, VertexId b) const { return next_[Index(a, b)]; }

  // Edge ids of the stored shortest a-b path, in order from a. Empty if a == b.
  std::vector<EdgeId> ExtractPath(VertexId a, VertexId b) const;

 private:
  size_t Index(VertexId a, VertexId b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b);
  }

  int n_ = 0;
  std::vector<std::int64_t> dist_;
  std::vector<VertexId> next_;
  std::vector<EdgeId> edge_id_;  // direct edge between two vertices, or -1
};

}  // namespace netcon

#endif  // NETCON_METRIC_CLOSURE_H_
