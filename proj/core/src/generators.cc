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

#include "netcon/generators.h"

#include <algorithm>
#include <set>
#include <string>

namespace netcon {

std::optional<GeneratorKind> ParseGeneratorKind(std::string_view name) {
  if (name == "random_tree" || name == "tree") return GeneratorKind::kRandomTree;
  if (name == "star") return GeneratorKind::kStar;
  if (name == "path") return GeneratorKind::kPath;
  if (name == "spider") return GeneratorKind::kSpider;
  if (name == "random_graph" || name == "graph") return GeneratorKind::kRandomGraph;
  return std::nullopt;
}

std::uint64_t Rng::Next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::Uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(Next());
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInstanceError("generator: " + what);
}

}  // namespace

Instance Generate(const GeneratorParams& params) {
  const int n = params.vertex_count;
  Require(n >= 2, "vertex_count must be >= 2");
  Require(params.min_length >= 1 && params.min_length <= params.max_length,
          "length range must satisfy 1 <= min <= max");
  Require(params.min_weight >= 1 && params.min_weight <= params.max_weight,
          "weight range must satisfy 1 <= min <= max");
  Require(params.min_due <= params.max_due, "due range must satisfy min <= max");

  Rng rng(params.seed);
  auto length = [&] { return rng.Uniform(params.min_length, params.max_length); };

  std::vector<Edge> edges;
  switch (params.kind) {
    case GeneratorKind::kPath:
      for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, length()});
      break;
    case GeneratorKind::kStar:
      for (VertexId v = 1; v < n; ++v) edges.push_back({0, v, length()});
      break;
    case GeneratorKind::kSpider: {
      Require(params.legs >= 1 && params.legs <= n - 1, "spider legs must lie in [1, n-1]");
      const int base = (n - 1) / params.legs;
      const int longer = (n - 1) % params.legs;
      VertexId next = 1;
      for (int leg = 0; leg < params.legs; ++leg) {
        VertexId prev = 0;
        for (int k = 0; k < base + (leg < longer ? 1 : 0); ++k) {
          edges.push_back({prev, next, length()});
          prev = next++;
        }
      }
      break;
    }
    case GeneratorKind::kRandomTree:
    case GeneratorKind::kRandomGraph: {
      // Random recursive tree over a shuffled labelling.
      std::vector<VertexId> order(static_cast<size_t>(n));
      for (VertexId v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[static_cast<size_t>(i)],
                  order[static_cast<size_t>(rng.Uniform(0, i))]);
      }
      for (int i = 1; i < n; ++i) {
        const VertexId parent = order[static_cast<size_t>(rng.Uniform(0, i - 1))];
        const VertexId child = order[static_cast<size_t>(i)];
        edges.push_back({std::min(parent, child), std::max(parent, child), length()});
      }
      if (params.kind == GeneratorKind::kRandomGraph) {
        const std::int64_t max_edges = std::int64_t{n} * (n - 1) / 2;
        Require(params.edge_count >= n - 1 && params.edge_count <= max_edges,
                "random_graph edge_count must lie in [n-1, n(n-1)/2]");
        std::set<std::pair<VertexId, VertexId>> used;
        for (const Edge& e : edges) used.emplace(e.u, e.v);
        // Draw from the complement so dense requests terminate quickly.
        std::vector<std::pair<VertexId, VertexId>> free;
        for (VertexId a = 0; a < n; ++a) {
          for (VertexId b = a + 1; b < n; ++b) {
            if (!used.count({a, b})) free.emplace_back(a, b);
          }
        }
        for (int k = n - 1; k < params.edge_count; ++k) {
          const auto pick = static_cast<size_t>(
              rng.Uniform(0, static_cast<std::int64_t>(free.size()) - 1));
          edges.push_back({free[pick].first, free[pick].second, length()});
          free[pick] = free.back();
          free.pop_back();
        }
      }
      break;
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });

  std::vector<std::pair<VertexId, VertexId>> endpoints = params.explicit_pairs;
  if (endpoints.empty()) {
    if (params.depot) {
      const VertexId d = *params.depot;
      Require(d >= 0 && d < n, "depot out of range");
      Require(params.pair_count >= 1 && params.pair_count <= n - 1,
              "depot pair_count must lie in [1, n-1]");
      std::vector<VertexId> others;
      for (VertexId v = 0; v < n; ++v) {
        if (v != d) others.push_back(v);
      }
      for (int k = 0; k < params.pair_count; ++k) {
        const auto pick = static_cast<size_t>(
            rng.Uniform(k, static_cast<std::int64_t>(others.size()) - 1));
        std::swap(others[static_cast<size_t>(k)], others[pick]);
        endpoints.emplace_back(d, others[static_cast<size_t>(k)]);
      }
    } else {
      const std::int64_t max_pairs = std::int64_t{n} * (n - 1) / 2;
      Require(params.pair_count >= 1 && params.pair_count <= max_pairs,
              "pair_count must lie in [1, n(n-1)/2]");
      std::set<std::pair<VertexId, VertexId>> chosen;
      while (static_cast<int>(chosen.size()) < params.pair_count) {
        const auto a = static_cast<VertexId>(rng.Uniform(0, n - 1));
        const auto b = static_cast<VertexId>(rng.Uniform(0, n - 1));
        if (a != b) chosen.emplace(std::min(a, b), std::max(a, b));
      }
      endpoints.assign(chosen.begin(), chosen.end());
    }
  }
  for (auto& [a, b] : endpoints) {
    if (a > b) std::swap(a, b);
  }
  std::sort(endpoints.begin(), endpoints.end());

  std::vector<RelevantPair> pairs;
  for (const auto& [a, b] : endpoints) {
    RelevantPair p{a, b, rng.Uniform(params.min_weight, params.max_weight),
                   std::nullopt};
    if (params.objective == Objective::kMaxLateness) {
      p.due = rng.Uniform(params.min_due, params.max_due);
    }
    pairs.push_back(p);
  }
  return Instance(Network(n, std::move(edges)), std::move(pairs), params.objective);
}

}  // namespace netcon
