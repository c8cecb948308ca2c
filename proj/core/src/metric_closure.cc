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

#include "netcon/metric_closure.h"

#include <limits>

namespace netcon {

MetricClosure::MetricClosure(const Network& network) : n_(network.vertex_count()) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const auto size = static_cast<size_t>(n_) * static_cast<size_t>(n_);
  dist_.assign(size, kInf);
  next_.assign(size, -1);
  edge_id_.assign(size, -1);
  for (VertexId v = 0; v < n_; ++v) {
    dist_[Index(v, v)] = 0;
    next_[Index(v, v)] = v;
  }
  for (EdgeId id = 0; id < network.edge_count(); ++id) {
    const Edge& e = network.edge(id);
    edge_id_[Index(e.u, e.v)] = edge_id_[Index(e.v, e.u)] = id;
    dist_[Index(e.u, e.v)] = dist_[Index(e.v, e.u)] = e.length;
    next_[Index(e.u, e.v)] = e.v;
    next_[Index(e.v, e.u)] = e.u;
  }

  for (VertexId k = 0; k < n_; ++k) {
    for (VertexId i = 0; i < n_; ++i) {
      const std::int64_t dik = dist_[Index(i, k)];
      if (dik >= kInf) continue;
      std::int64_t* row = &dist_[Index(i, 0)];
      const std::int64_t* krow = &dist_[Index(k, 0)];
      for (VertexId j = 0; j < n_; ++j) {
        // Strict improvement only, so the stored paths do not depend on
        // anything but vertex order.
        if (dik + krow[j] < row[j]) {
          row[j] = dik + krow[j];
          next_[Index(i, j)] = next_[Index(i, k)];
        }
      }
    }
  }
}

std::vector<EdgeId> MetricClosure::ExtractPath(VertexId a, VertexId b) const {
  std::vector<EdgeId> path;
  VertexId x = a;
  while (x != b) {
    const VertexId y = next_hop(x, b);
    path.push_back(edge_id_[Index(x, y)]);
    x = y;
  }
  return path;
}

}  // namespace netcon
