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

// Acceptance suite: oracle equivalence, structural properties, runtime budgets
// and determinism. Shared by the acceptance test binary and `netcon selftest`.

#ifndef NETCON_SELFTEST_H_
#define NETCON_SELFTEST_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "netcon/instance.h"

namespace netcon {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SelfTestOptions {
  std::uint64_t seed = 20260415;
  // Worker count for the parallel side of the determinism check.
  int threads = 4;
  // Extra instance files for the determinism check.
  std::vector<std::string> fixture_paths;
  // Criteria to run; empty runs all.
  std::vector<int> only;
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> RunSelfTest(const SelfTestOptions& options = {});

// One line per criterion: `[PASS] 1 tree-solver exactness (0.42 s): ...`.
std::string FormatCriterion(const CriterionResult& result);

// Every graph on `vertex_count` vertices up to isomorphism, as edge lists.
std::vector<std::vector<std::pair<VertexId, VertexId>>> NonIsomorphicGraphs(
    int vertex_count);

// Deterministic solver output used by the determinism check.
std::string SolverOutput(const Instance& instance, const std::string& backend, int threads);

}  // namespace netcon

#endif  // NETCON_SELFTEST_H_
