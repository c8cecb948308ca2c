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

// Evaluation of construction orders.
//
// Edges are built one at a time without preemption; the k-th edge completes
// at the sum of the first k lengths. A pair's connection time is the
// completion time of the shortest prefix whose edge set joins its endpoints.

#ifndef NETCON_EVALUATOR_H_
#define NETCON_EVALUATOR_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netcon/instance.h"

namespace netcon {

using BuildSequence = std::vector<EdgeId>;

class EvaluationError : public Error {
 public:
  using Error::Error;
};

struct ConnectionReport {
  // Indexed like Instance::pairs().
  std::vector<std::int64_t> times;
  std::int64_t objective = 0;

  friend bool operator==(const ConnectionReport&, const ConnectionReport&) = default;
};

// Sum of w * t, or max of (t - due), depending on the instance objective.
std::int64_t ObjectiveValue(const Instance& instance,
                            std::span<const std::int64_t> times);

// Throws EvaluationError on out-of-range or repeated edge ids and when the
// sequence leaves some pair disconnected.
ConnectionReport EvaluateSequence(const Instance& instance,
                                  std::span<const EdgeId> sequence);

struct Verdict {
  bool accepted = false;
  std::vector<std::string> discrepancies;
};

// Recomputes the report for `sequence` and lists every difference from
// `claimed`. Invalid sequences are rejected, never thrown.
Verdict ValidateSequence(const Instance& instance,
                         std::span<const EdgeId> sequence,
                         const ConnectionReport& claimed);

// `pair <u> <v> t=<time>` per pair in (u, v) order, then `objective <value>`.
std::string FormatReport(const Instance& instance, const ConnectionReport& report);

// Solver output: FormatReport followed by a `sequence` header and one edge id
// per line.
std::string FormatSolution(const Instance& instance, const ConnectionReport& report,
                           std::span<const EdgeId> sequence);

struct ParsedSolution {
  // Empty when the text carried no pair lines.
  ConnectionReport claimed;
  bool has_report = false;
  BuildSequence sequence;
};

// Parses FormatSolution output (or a bare `sequence` section). Pair lines are
// mapped back to pair indices of `instance`. Throws ParseError.
ParsedSolution ParseSolution(const Instance& instance, std::string_view text);

}  // namespace netcon

#endif  // NETCON_EVALUATOR_H_
