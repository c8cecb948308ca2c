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

#include "netcon/ola_reduction.h"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "netcon/instance_io.h"
#include "netcon/text_util.h"

namespace netcon {

void ValidateOla(const OlaInput& input) {
  if (input.vertex_count < 1) {
    throw InvalidInstanceError("ola: vertex count must be positive");
  }
  if (input.threshold < 0) {
    throw InvalidInstanceError("ola: threshold must be non-negative");
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [a, b] : input.edges) {
    if (a < 0 || b < 0 || a >= input.vertex_count || b >= input.vertex_count) {
      throw InvalidInstanceError("ola: edge vertex out of range");
    }
    if (a == b) throw InvalidInstanceError("ola: self-loop");
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw InvalidInstanceError("ola: duplicate edge");
    }
  }
}

OlaInput ParseOla(std::string_view text) {
  OlaInput out;
  bool header = false;
  bool have_vertices = false;
  bool have_threshold = false;
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
    if (!header) {
      if (tok.size() != 2 || tok[0] != "ola" || tok[1] != "1") {
        throw ParseError(line_no, "expected header 'ola 1'");
      }
      header = true;
    } else if (tok[0] == "vertices" && tok.size() == 2 && !have_vertices) {
      out.vertex_count = static_cast<int>(num(tok[1]));
      have_vertices = true;
    } else if (tok[0] == "edge" && tok.size() == 3) {
      if (!have_vertices) throw ParseError(line_no, "edge before vertices line");
      out.edges.emplace_back(static_cast<VertexId>(num(tok[1])),
                             static_cast<VertexId>(num(tok[2])));
    } else if (tok[0] == "threshold" && tok.size() == 2 && !have_threshold) {
      out.threshold = num(tok[1]);
      have_threshold = true;
    } else {
      throw ParseError(line_no, "unrecognized line");
    }
  }
  if (!header || !have_vertices) throw ParseError(0, "incomplete ola file");
  try {
    ValidateOla(out);
  } catch (const InvalidInstanceError& e) {
    throw ParseError(0, e.what());
  }
  return out;
}

std::string WriteOla(const OlaInput& input) {
  std::ostringstream out;
  out << "ola 1\nvertices " << input.vertex_count << "\n";
  for (auto [a, b] : input.edges) out << "edge " << a << " " << b << "\n";
  out << "threshold " << input.threshold << "\n";
  return out.str();
}

std::int64_t OlaOffset(int vertex_count) {
  const std::int64_t n = vertex_count;
  return n * n * (n + 1) / 2;
}

OlaReduction ReduceOla(const OlaInput& input) {
  ValidateOla(input);
  const int n = input.vertex_count;
  std::vector<int> degree(static_cast<size_t>(n), 0);
  for (auto [a, b] : input.edges) {
    ++degree[static_cast<size_t>(a)];
    ++degree[static_cast<size_t>(b)];
  }

  std::vector<Edge> edges;
  std::vector<RelevantPair> pairs;
  for (VertexId v = 0; v < n; ++v) {
    edges.push_back({0, v + 1, 1});
    const std::int64_t w = n - degree[static_cast<size_t>(v)];
    // Zero-weight pairs contribute nothing and are left out. A simple graph
    // has deg(v) <= N - 1, so this never fires for validated input.
    if (w > 0) pairs.push_back({0, v + 1, w, std::nullopt});
  }
  for (auto [a, b] : input.edges) {
    pairs.push_back({std::min(a, b) + 1, std::max(a, b) + 1, 2, std::nullopt});
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  return {Instance(Network(n + 1, std::move(edges)), std::move(pairs)),
          OlaOffset(n) + input.threshold};
}

}  // namespace netcon
