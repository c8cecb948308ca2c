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

#include "netcon/instance_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "netcon/text_util.h"

namespace netcon {

ParseError::ParseError(int line, const std::string& message)
    : InvalidInstanceError(line > 0
                               ? "line " + std::to_string(line) + ": " + message
                               : message),
      line_(line) {}

namespace {

std::int64_t ToInt(std::string_view token, int line) {
  const auto value = ParseInt64(token);
  if (!value) {
    throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
  }
  return *value;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  std::optional<Objective> objective;
  std::optional<int> vertex_count;
  int vertices_line = 0;
  bool saw_header = false;
  std::vector<Edge> edges;
  std::vector<RelevantPair> pairs;
  std::map<std::pair<VertexId, VertexId>, int> edge_lines;
  std::map<std::pair<VertexId, VertexId>, int> pair_lines;

  int line_no = 0;
  for (const std::string_view raw : SplitLines(text)) {
    ++line_no;
    const std::vector<std::string_view> tok = Tokenize(StripComment(raw));
    if (tok.empty()) continue;
    const std::string_view key = tok[0];

    if (!saw_header) {
      if (key != "netcon" || tok.size() != 2 || tok[1] != "1") {
        throw ParseError(line_no, "expected header 'netcon 1'");
      }
      saw_header = true;
      continue;
    }

    if (key == "objective") {
      if (tok.size() != 2) throw ParseError(line_no, "usage: objective wct|maxlat");
      if (objective) throw ParseError(line_no, "duplicate objective line");
      if (tok[1] == "wct") {
        objective = Objective::kWeightedSum;
      } else if (tok[1] == "maxlat") {
        objective = Objective::kMaxLateness;
      } else {
        throw ParseError(line_no, "unknown objective '" + std::string(tok[1]) + "'");
      }
    } else if (key == "vertices") {
      if (tok.size() != 2) throw ParseError(line_no, "usage: vertices <n>");
      if (vertex_count) throw ParseError(line_no, "duplicate vertices line");
      const std::int64_t n = ToInt(tok[1], line_no);
      if (n < 1 || n > 1'000'000) throw ParseError(line_no, "vertex count out of range");
      vertex_count = static_cast<int>(n);
      vertices_line = line_no;
    } else if (key == "edge") {
      if (tok.size() != 4) throw ParseError(line_no, "usage: edge <u> <v> <length>");
      if (!vertex_count) throw ParseError(line_no, "edge before vertices line");
      Edge e{static_cast<VertexId>(ToInt(tok[1], line_no)),
             static_cast<VertexId>(ToInt(tok[2], line_no)), ToInt(tok[3], line_no)};
      if (e.u < 0 || e.v < 0 || e.u >= *vertex_count || e.v >= *vertex_count) {
        throw ParseError(line_no, "edge vertex id out of range");
      }
      if (e.u == e.v) throw ParseError(line_no, "self-loop edge");
      if (e.length < 1) throw ParseError(line_no, "edge length must be >= 1");
      const auto key_uv = std::minmax(e.u, e.v);
      if (auto [it, fresh] = edge_lines.emplace(key_uv, line_no); !fresh) {
        throw ParseError(line_no, "duplicate edge (first on line " +
                                      std::to_string(it->second) + ")");
      }
      edges.push_back(e);
    } else if (key == "pair") {
      if (tok.size() != 4 && tok.size() != 5) {
        throw ParseError(line_no, "usage: pair <u> <v> <weight> [<due>]");
      }
      if (!vertex_count) throw ParseError(line_no, "pair before vertices line");
      RelevantPair p{static_cast<VertexId>(ToInt(tok[1], line_no)),
                     static_cast<VertexId>(ToInt(tok[2], line_no)),
                     ToInt(tok[3], line_no), std::nullopt};
      if (tok.size() == 5) p.due = ToInt(tok[4], line_no);
      if (p.u < 0 || p.v < 0 || p.u >= *vertex_count || p.v >= *vertex_count) {
        throw ParseError(line_no, "pair vertex id out of range");
      }
      if (p.u == p.v) throw ParseError(line_no, "pair endpoints must differ");
      if (p.weight <= 0) throw ParseError(line_no, "pair weight must be positive");
      const auto key_uv = std::minmax(p.u, p.v);
      if (auto [it, fresh] = pair_lines.emplace(key_uv, line_no); !fresh) {
        throw ParseError(line_no, "duplicate pair (first on line " +
                                      std::to_string(it->second) + ")");
      }
      pairs.push_back(p);
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }

  if (!saw_header) throw ParseError(0, "empty instance file");
  if (!vertex_count) throw ParseError(0, "missing vertices line");
  if (!objective) objective = Objective::kWeightedSum;
  if (pairs.empty()) throw ParseError(0, "no relevant pairs");

  // Due dates are validated here so the error carries the pair's line.
  for (const auto& p : pairs) {
    const int line = pair_lines.at(std::minmax(p.u, p.v));
    if (*objective == Objective::kMaxLateness && !p.due) {
      throw ParseError(line, "pair is missing its due date (objective maxlat)");
    }
    if (*objective == Objective::kWeightedSum && p.due) {
      throw ParseError(line, "due date given but objective is wct");
    }
  }

  try {
    Network network(*vertex_count, std::move(edges));
    return Instance(std::move(network), std::move(pairs), *objective);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInstanceError& e) {
    throw ParseError(vertices_line, e.what());
  }
}

std::string WriteInstance(const Instance& instance) {
  const Network& net = instance.network();
  std::vector<Edge> edges = net.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  std::vector<RelevantPair> pairs = instance.pairs();
  std::sort(pairs.begin(), pairs.end(),
            [](const RelevantPair& a, const RelevantPair& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });

  std::ostringstream out;
  out << "netcon 1\n";
  out << "objective " << ObjectiveName(instance.objective()) << "\n";
  out << "vertices " << net.vertex_count() << "\n";
  for (const Edge& e : edges) {
    out << "edge " << e.u << " " << e.v << " " << e.length << "\n";
  }
  for (const RelevantPair& p : pairs) {
    out << "pair " << p.u << " " << p.v << " " << p.weight;
    if (p.due) out << " " << *p.due;
    out << "\n";
  }
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace netcon
