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

#include "netcon/oracle.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "netcon/union_find.h"

namespace netcon {
namespace {

void Guard(bool over, const OracleOptions& options, const std::string& what) {
  if (over && !options.force) throw GuardExceededError("oracle guard: " + what);
}

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMinusInf = std::numeric_limits<std::int64_t>::min();

}  // namespace

OracleSolution SubsetDp(const Instance& instance, const OracleOptions& options) {
  const Network& net = instance.network();
  const int m = net.edge_count();
  const int r = instance.pair_count();
  Guard(m > options.max_edges_subset, options,
        std::to_string(m) + " edges exceed the subset DP limit of " +
            std::to_string(options.max_edges_subset));
  if (m > 30 || r > 64) throw GuardExceededError("subset DP hard limit exceeded");

  const auto& pairs = instance.pairs();
  const bool sum = instance.objective() == Objective::kWeightedSum;
  const size_t states = size_t{1} << m;
  const std::uint64_t all_pairs = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;

  // Connected-pair mask and total length per subset.
  std::vector<std::uint64_t> connected(states, 0);
  std::vector<std::int64_t> length(states, 0);
  UnionFind uf(net.vertex_count());
  for (size_t s = 1; s < states; ++s) {
    const int low = __builtin_ctzll(s);
    length[s] = length[s & (s - 1)] + net.edge(low).length;
    uf.Reset(net.vertex_count());
    for (size_t rest = s; rest; rest &= rest - 1) {
      const Edge& e = net.edge(__builtin_ctzll(rest));
      uf.Union(e.u, e.v);
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < r; ++i) {
      if (uf.Connected(pairs[static_cast<size_t>(i)].u, pairs[static_cast<size_t>(i)].v)) {
        mask |= std::uint64_t{1} << i;
      }
    }
    connected[s] = mask;
  }

  std::vector<std::int64_t> best(states, kNone);
  std::vector<std::int8_t> last(states, -1);
  best[0] = sum ? 0 : kMinusInf;
  std::int64_t answer = kNone;
  size_t answer_state = 0;

  // Masks increase numerically, so every S - e is final before S.
  for (size_t s = 1; s < states; ++s) {
    for (size_t rest = s; rest; rest &= rest - 1) {
      const int e = __builtin_ctzll(rest);
      const size_t prev = s ^ (size_t{1} << e);
      // Unreachable, or already connecting every pair (terminal).
      if (best[prev] == kNone || connected[prev] == all_pairs) continue;
      const std::uint64_t fresh = connected[s] & ~connected[prev];
      std::int64_t value;
      if (sum) {
        std::int64_t w = 0;
        for (std::uint64_t f = fresh; f; f &= f - 1) {
          w += pairs[static_cast<size_t>(__builtin_ctzll(f))].weight;
        }
        value = best[prev] + w * length[s];
      } else {
        value = best[prev];
        for (std::uint64_t f = fresh; f; f &= f - 1) {
          const auto& p = pairs[static_cast<size_t>(__builtin_ctzll(f))];
          value = std::max(value, length[s] - p.due.value_or(0));
        }
      }
      if (value < best[s]) {
        best[s] = value;
        last[s] = static_cast<std::int8_t>(e);
      }
    }
    if (connected[s] == all_pairs && best[s] < answer) {
      answer = best[s];
      answer_state = s;
    }
  }

  OracleSolution out;
  out.objective = answer;
  for (size_t s = answer_state; s; s ^= size_t{1} << last[s]) {
    out.sequence.push_back(last[s]);
  }
  std::reverse(out.sequence.begin(), out.sequence.end());
  return out;
}

std::int64_t PermutationOracle(const Instance& instance, const OracleOptions& options) {
  const int m = instance.network().edge_count();
  Guard(m > options.max_edges_permutation, options,
        std::to_string(m) + " edges exceed the permutation limit of " +
            std::to_string(options.max_edges_permutation));
  BuildSequence order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::int64_t best = kNone;
  do {
    best = std::min(best, EvaluateSequence(instance, order).objective);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

std::int64_t Interleave(std::span<const Job> a, std::span<const Job> b, std::int64_t clock) {
  if (a.empty() && b.empty()) return 0;
  std::int64_t best = kNone;
  if (!a.empty()) {
    const std::int64_t t = clock + a[0].processing;
    best = std::min(best, a[0].weight * t + Interleave(a.subspan(1), b, t));
  }
  if (!b.empty()) {
    const std::int64_t t = clock + b[0].processing;
    best = std::min(best, b[0].weight * t + Interleave(a, b.subspan(1), t));
  }
  return best;
}

}  // namespace

std::int64_t InterleavingOracle(std::span<const Job> first, std::span<const Job> second,
                                const OracleOptions& options) {
  const auto total = static_cast<int>(first.size() + second.size());
  Guard(total > options.max_jobs_interleaving, options,
        std::to_string(total) + " jobs exceed the interleaving limit of " +
            std::to_string(options.max_jobs_interleaving));
  return Interleave(first, second, 0);
}

std::int64_t OlaOptimum(const OlaInput& input, const OracleOptions& options) {
  ValidateOla(input);
  Guard(input.vertex_count > options.max_ola_vertices, options,
        "too many vertices for brute-force arrangement");
  std::vector<int> position(static_cast<size_t>(input.vertex_count));
  std::iota(position.begin(), position.end(), 1);
  std::int64_t best = kNone;
  do {
    std::int64_t cost = 0;
    for (const auto& [a, b] : input.edges) {
      cost += std::abs(position[static_cast<size_t>(a)] - position[static_cast<size_t>(b)]);
    }
    best = std::min(best, cost);
  } while (std::next_permutation(position.begin(), position.end()));
  return best;
}

}  // namespace netcon
