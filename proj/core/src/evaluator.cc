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

#include "netcon/evaluator.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "netcon/instance_io.h"
#include "netcon/text_util.h"
#include "netcon/union_find.h"

namespace netcon {

std::int64_t ObjectiveValue(const Instance& instance,
                            std::span<const std::int64_t> times) {
  const auto& pairs = instance.pairs();
  if (instance.objective() == Objective::kWeightedSum) {
    std::int64_t total = 0;
    for (size_t i = 0; i < pairs.size(); ++i) total += pairs[i].weight * times[i];
    return total;
  }
  std::int64_t worst = std::numeric_limits<std::int64_t>::min();
  for (size_t i = 0; i < pairs.size(); ++i) {
    worst = std::max(worst, times[i] - pairs[i].due.value_or(0));
  }
  return worst;
}

ConnectionReport EvaluateSequence(const Instance& instance,
                                  std::span<const EdgeId> sequence) {
  const Network& net = instance.network();
  const auto& pairs = instance.pairs();
  std::vector<char> used(static_cast<size_t>(net.edge_count()), 0);
  UnionFind uf(net.vertex_count());

  ConnectionReport report;
  report.times.assign(pairs.size(), -1);
  std::vector<size_t> pending(pairs.size());
  std::iota(pending.begin(), pending.end(), size_t{0});

  std::int64_t clock = 0;
  for (const EdgeId id : sequence) {
    if (id < 0 || id >= net.edge_count()) {
      throw EvaluationError("edge id " + std::to_string(id) + " out of range");
    }
    if (used[static_cast<size_t>(id)]) {
      throw EvaluationError("edge id " + std::to_string(id) + " repeated");
    }
    used[static_cast<size_t>(id)] = 1;
    const Edge& e = net.edge(id);
    clock += e.length;
    if (!uf.Union(e.u, e.v)) continue;
    std::erase_if(pending, [&](size_t i) {
      if (!uf.Connected(pairs[i].u, pairs[i].v)) return false;
      report.times[i] = clock;
      return true;
    });
  }
  if (!pending.empty()) {
    const RelevantPair& p = pairs[pending.front()];
    throw EvaluationError("sequence does not connect pair " + std::to_string(p.u) +
                          " " + std::to_string(p.v));
  }
  report.objective = ObjectiveValue(instance, report.times);
  return report;
}

Verdict ValidateSequence(const Instance& instance, std::span<const EdgeId> sequence,
                         const ConnectionReport& claimed) {
  Verdict verdict;
  ConnectionReport actual;
  try {
    actual = EvaluateSequence(instance, sequence);
  } catch (const EvaluationError& e) {
    verdict.discrepancies.push_back(std::string("invalid sequence: ") + e.what());
    return verdict;
  }
  const auto& pairs = instance.pairs();
  if (claimed.times.size() != pairs.size()) {
    verdict.discrepancies.push_back("report lists " +
                                    std::to_string(claimed.times.size()) +
                                    " pairs, instance has " +
                                    std::to_string(pairs.size()));
  } else {
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (claimed.times[i] != actual.times[i]) {
        verdict.discrepancies.push_back(
            "pair " + std::to_string(pairs[i].u) + " " + std::to_string(pairs[i].v) +
            ": claimed t=" + std::to_string(claimed.times[i]) +
            ", actual t=" + std::to_string(actual.times[i]));
      }
    }
  }
  if (claimed.objective != actual.objective) {
    verdict.discrepancies.push_back("objective: claimed " +
                                    std::to_string(claimed.objective) + ", actual " +
                                    std::to_string(actual.objective));
  }
  verdict.accepted = verdict.discrepancies.empty();
  return verdict;
}

namespace {

std::vector<size_t> CanonicalPairOrder(const Instance& instance) {
  const auto& pairs = instance.pairs();
  std::vector<size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::pair(pairs[a].u, pairs[a].v) < std::pair(pairs[b].u, pairs[b].v);
  });
  return order;
}

}  // namespace

std::string FormatReport(const Instance& instance, const ConnectionReport& report) {
  std::ostringstream out;
  const auto& pairs = instance.pairs();
  for (const size_t i : CanonicalPairOrder(instance)) {
    out << "pair " << pairs[i].u << " " << pairs[i].v << " t=" << report.times[i]
        << "\n";
  }
  out << "objective " << report.objective << "\n";
  return out.str();
}

std::string FormatSolution(const Instance& instance, const ConnectionReport& report,
                           std::span<const EdgeId> sequence) {
  std::string out = FormatReport(instance, report);
  out += "sequence\n";
  for (const EdgeId id : sequence) out += std::to_string(id) + "\n";
  return out;
}

ParsedSolution ParseSolution(const Instance& instance, std::string_view text) {
  const auto& pairs = instance.pairs();
  std::map<std::pair<VertexId, VertexId>, size_t> index;
  for (size_t i = 0; i < pairs.size(); ++i) index[{pairs[i].u, pairs[i].v}] = i;

  ParsedSolution out;
  std::vector<std::optional<std::int64_t>> times(pairs.size());
  std::optional<std::int64_t> objective;
  bool in_sequence = false;
  int line_no = 0;
  for (const std::string_view raw : SplitLines(text)) {
    ++line_no;
    const auto tok = Tokenize(StripComment(raw));
    if (tok.empty()) continue;
    auto num = [&](std::string_view t) {
      const auto v = ParseInt64(t);
      if (!v) throw ParseError(line_no, "expected integer, got '" + std::string(t) + "'");
      return *v;
    };
    if (in_sequence) {
      if (tok.size() != 1) throw ParseError(line_no, "expected one edge id per line");
      out.sequence.push_back(static_cast<EdgeId>(num(tok[0])));
    } else if (tok[0] == "sequence" && tok.size() == 1) {
      in_sequence = true;
    } else if (tok[0] == "objective" && tok.size() == 2) {
      objective = num(tok[1]);
    } else if (tok[0] == "pair" && tok.size() == 4 && tok[3].starts_with("t=")) {
      auto a = static_cast<VertexId>(num(tok[1]));
      auto b = static_cast<VertexId>(num(tok[2]));
      if (a > b) std::swap(a, b);
      const auto it = index.find({a, b});
      if (it == index.end()) throw ParseError(line_no, "pair not in instance");
      times[it->second] = num(tok[3].substr(2));
      out.has_report = true;
    } else {
      throw ParseError(line_no, "unrecognized line");
    }
  }
  if (!in_sequence) throw ParseError(0, "missing 'sequence' section");
  if (objective) out.has_report = true;
  if (out.has_report) {
    if (!objective) throw ParseError(0, "report has no objective line");
    out.claimed.objective = *objective;
    for (size_t i = 0; i < times.size(); ++i) {
      if (!times[i]) {
        throw ParseError(0, "report is missing pair " + std::to_string(pairs[i].u) +
                                " " + std::to_string(pairs[i].v));
      }
      out.claimed.times.push_back(*times[i]);
    }
  }
  return out;
}

}  // namespace netcon
