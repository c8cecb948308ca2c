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

// Brute-force reference solvers. They share no code path with the exact
// solvers beyond the evaluator and serve as ground truth in tests.

#ifndef NETCON_ORACLE_H_
#define NETCON_ORACLE_H_

#include <cstdint>
#include <span>

#include "netcon/chain_sched.h"
#include "netcon/evaluator.h"
#include "netcon/instance.h"
#include "netcon/ola_reduction.h"

namespace netcon {

struct OracleOptions {
  int max_edges_subset = 22;
  int max_edges_permutation = 8;
  int max_jobs_interleaving = 14;
  int max_ola_vertices = 10;
  bool force = false;
};

struct OracleSolution {
  std::int64_t objective = 0;
  // Edges built until the last pair connects; ties prefer the lowest edge id.
  BuildSequence sequence;
};

// Dynamic program over edge subsets. For a set S built in any order, the pairs
// that S connects but S - e does not connect become connected exactly when the
// last edge e finishes, at time length(S). That charge does not depend on the
// order inside S - e, so
//   f(S) = min over e in S of  agg(f(S - e), penalty(new pairs, length(S)))
// with agg = sum (wct) or max (maxlat) is exact.
OracleSolution SubsetDp(const Instance& instance, const OracleOptions& options = {});

// Minimum over all m! full edge orders.
std::int64_t PermutationOracle(const Instance& instance, const OracleOptions& options = {});

// Minimum sum w_j C_j over all order-preserving interleavings of two chains.
std::int64_t InterleavingOracle(std::span<const Job> first, std::span<const Job> second,
                                const OracleOptions& options = {});

// Minimum total stretch sum |f(u) - f(v)| over all vertex arrangements.
std::int64_t OlaOptimum(const OlaInput& input, const OracleOptions& options = {});

}  // namespace netcon

#endif  // NETCON_ORACLE_H_
