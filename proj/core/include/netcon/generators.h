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

// Deterministic instance generators.

#ifndef NETCON_GENERATORS_H_
#define NETCON_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "netcon/instance.h"

namespace netcon {

enum class GeneratorKind { kRandomTree, kStar, kPath, kSpider, kRandomGraph };

std::optional<GeneratorKind> ParseGeneratorKind(std::string_view name);

struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::kRandomTree;
  int vertex_count = 2;
  // Total edge count for kRandomGraph; ignored for the tree shapes.
  int edge_count = 0;
  // Leg count for kSpider; legs hang off vertex 0 and differ in length by <= 1.
  int legs = 3;
  std::int64_t min_length = 1;
  std::int64_t max_length = 1;
  std::int64_t min_weight = 1;
  std::int64_t max_weight = 1;
  // Random distinct pairs to draw when explicit_pairs is empty.
  int pair_count = 1;
  // Fixed endpoints; weights are still drawn from [min_weight, max_weight].
  std::vector<std::pair<VertexId, VertexId>> explicit_pairs;
  // When set, pairs within [0, pair_count) all share vertex `*depot`.
  std::optional<VertexId> depot;
  Objective objective = Objective::kWeightedSum;
  // Due dates are drawn from [min_due, max_due] for kMaxLateness.
  std::int64_t min_due = 0;
  std::int64_t max_due = 0;
  std::uint64_t seed = 0;
};

// Throws InvalidInstanceError for infeasible parameters.
Instance Generate(const GeneratorParams& params);

// SplitMix64. Fully specified so generated instances are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();
  // Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

}  // namespace netcon

#endif  // NETCON_GENERATORS_H_
