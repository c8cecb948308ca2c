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

// Reduction from OPTIMAL LINEAR ARRANGEMENT to the construction scheduling
// problem on a star. Given a graph G~ on N vertices and a bound K, the star
// has center 0 and a unit edge (0, v + 1) per vertex v of G~. Center pairs
// {0, v + 1} get weight N - deg(v) and every edge (u, v) of G~ becomes the
// leaf pair {u + 1, v + 1} of weight 2. G~ admits an arrangement of total
// stretch <= K iff the star instance has optimum <= N^2 (N + 1) / 2 + K.
//
// OLA file format:
//
//   ola 1
//   vertices <n>
//   edge <u> <v>
//   threshold <K>

#ifndef NETCON_OLA_REDUCTION_H_
#define NETCON_OLA_REDUCTION_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netcon/instance.h"

namespace netcon {

struct OlaInput {
  int vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::int64_t threshold = 0;
};

// Throws InvalidInstanceError if the graph is not simple or K < 0.
void ValidateOla(const OlaInput& input);

OlaInput ParseOla(std::string_view text);
std::string WriteOla(const OlaInput& input);

struct OlaReduction {
  Instance instance;
  std::int64_t threshold = 0;
};

OlaReduction ReduceOla(const OlaInput& input);

// Constant added by the reduction: N^2 (N + 1) / 2.
std::int64_t OlaOffset(int vertex_count);

}  // namespace netcon

#endif  // NETCON_OLA_REDUCTION_H_
