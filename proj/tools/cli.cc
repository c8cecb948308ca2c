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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "netcon/evaluator.h"
#include "netcon/generators.h"
#include "netcon/instance_io.h"
#include "netcon/metric_solver.h"
#include "netcon/ola_reduction.h"
#include "netcon/oracle.h"
#include "netcon/selftest.h"
#include "netcon/text_util.h"
#include "netcon/tree_solver.h"

namespace netcon::cli {
namespace {

// Guard defaults, overridable through the environment.
int EnvInt(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return fallback;
  const auto v = ParseInt64(raw);
  return v && *v > 0 && *v < 1'000'000 ? static_cast<int>(*v) : fallback;
}

struct Guards {
  int max_leaves = EnvInt("NETCON_LEAF_GUARD", TreeSolverOptions{}.max_leaves);
  int max_pairs = EnvInt("NETCON_R_GUARD", FixedROptions{}.max_pairs);
  int max_edges = EnvInt("NETCON_ORACLE_EDGE_GUARD", OracleOptions{}.max_edges_subset);
  bool force = false;
};

void AddGuardFlags(CLI::App* cmd, Guards& g) {
  cmd->add_option("--max-leaves", g.max_leaves, "Leaf guard of the tree backend")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-pairs", g.max_pairs, "Pair-count guard of the fixed-r backend")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-edges", g.max_edges, "Edge guard of the subset oracle")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--force", g.force, "Run past the guards");
}

void WriteOutput(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw Error("cannot write '" + path + "'");
}

struct SolveArgs {
  std::string input;
  std::string output;
  std::string backend = "auto";
  bool depot = false;
  int threads = 1;
  Guards guards;
};

std::string ResolveBackend(const Instance& inst, const SolveArgs& a) {
  if (a.backend != "auto") return a.backend;
  const Network& net = inst.network();
  if (net.is_tree() && inst.objective() == Objective::kWeightedSum &&
      net.leaf_count() <= a.guards.max_leaves) {
    return "tree";
  }
  return "fixed-r";
}

int DoSolve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = ParseInstance(ReadFile(a.input));
  const std::string backend = ResolveBackend(inst, a);
  BuildSequence sequence;
  ConnectionReport report;
  if (backend == "tree") {
    TreeSolverOptions opt;
    opt.max_leaves = a.guards.max_leaves;
    opt.force = a.guards.force;
    opt.threads = a.threads;
    TreeSolution sol = SolveTree(inst, opt);
    sequence = std::move(sol.sequence);
    report = std::move(sol.report);
  } else {
    FixedROptions opt;
    opt.depot_mode = a.depot;
    opt.max_pairs = a.guards.max_pairs;
    opt.max_pairs_depot = std::max(a.guards.max_pairs, opt.max_pairs_depot);
    opt.force = a.guards.force;
    opt.threads = a.threads;
    FixedRSolution sol = SolveFixedR(inst, opt);
    sequence = std::move(sol.sequence);
    report = std::move(sol.report);
  }
  err << "backend " << backend << "\n";
  WriteOutput(a.output, FormatSolution(inst, report, sequence), out);
  return kOk;
}

struct OracleArgs {
  std::string input;
  std::string method = "subset";
  bool show_sequence = false;
  Guards guards;
};

int DoOracle(const OracleArgs& a, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(a.input));
  OracleOptions opt;
  opt.max_edges_subset = a.guards.max_edges;
  opt.force = a.guards.force;
  if (a.method == "permutation") {
    out << "objective " << PermutationOracle(inst, opt) << "\n";
    return kOk;
  }
  const OracleSolution sol = SubsetDp(inst, opt);
  if (a.show_sequence) {
    out << FormatSolution(inst, EvaluateSequence(inst, sol.sequence), sol.sequence);
  } else {
    out << "objective " << sol.objective << "\n";
  }
  return kOk;
}

struct GenArgs {
  std::string kind = "random_tree";
  std::string output;
  std::string objective = "wct";
  std::vector<std::int64_t> lengths{1, 10};
  std::vector<std::int64_t> weights{1, 5};
  std::vector<std::int64_t> dues{0, 0};
  int depot = -1;
  GeneratorParams params;
};

int DoGen(GenArgs& a, std::ostream& out) {
  const auto kind = ParseGeneratorKind(a.kind);
  if (!kind) throw InvalidInstanceError("unknown generator kind '" + a.kind + "'");
  GeneratorParams& p = a.params;
  p.kind = *kind;
  if (a.objective == "maxlat") {
    p.objective = Objective::kMaxLateness;
  } else if (a.objective != "wct") {
    throw InvalidInstanceError("unknown objective '" + a.objective + "'");
  }
  p.min_length = a.lengths[0];
  p.max_length = a.lengths[1];
  p.min_weight = a.weights[0];
  p.max_weight = a.weights[1];
  p.min_due = a.dues[0];
  p.max_due = a.dues[1];
  if (a.depot >= 0) p.depot = a.depot;
  WriteOutput(a.output, WriteInstance(Generate(p)), out);
  return kOk;
}

int DoReduceOla(const std::string& input, const std::string& output, std::ostream& out,
                std::ostream& err) {
  const OlaReduction red = ReduceOla(ParseOla(ReadFile(input)));
  WriteOutput(output,
              "# threshold " + std::to_string(red.threshold) + "\n" +
                  WriteInstance(red.instance),
              out);
  err << "threshold " << red.threshold << "\n";
  return kOk;
}

int DoValidate(const std::string& input, const std::string& solution, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(input));
  const std::string text = ReadFile(solution);
  ParsedSolution parsed;
  try {
    parsed = ParseSolution(inst, text);
  } catch (const ParseError& e) {
    out << "rejected\n" << "malformed solution: " << e.what() << "\n";
    return kValidationFailed;
  }
  Verdict verdict;
  if (parsed.has_report) {
    verdict = ValidateSequence(inst, parsed.sequence, parsed.claimed);
  } else {
    try {
      const ConnectionReport r = EvaluateSequence(inst, parsed.sequence);
      verdict.accepted = true;
      out << "accepted\nobjective " << r.objective << "\n";
      return kOk;
    } catch (const EvaluationError& e) {
      verdict.discrepancies.push_back(std::string("invalid sequence: ") + e.what());
    }
  }
  if (verdict.accepted) {
    out << "accepted\n";
    return kOk;
  }
  out << "rejected\n";
  for (const auto& d : verdict.discrepancies) out << d << "\n";
  return kValidationFailed;
}

struct BenchArgs {
  std::string family = "all";
  std::vector<int> sizes;
  std::uint64_t seed = 1;
  int threads = 1;
};

int DoBench(const BenchArgs& a, std::ostream& out) {
  struct Family {
    std::string name;
    std::vector<int> default_sizes;
  };
  const std::vector<Family> families = {
      {"path", {25, 50, 100, 150, 200}},
      {"spider3", {15, 30, 45, 60}},
      {"fixed-r2", {25, 50, 100, 150}},
  };
  out << std::left << std::setw(10) << "family" << std::right << std::setw(6) << "n"
      << std::setw(7) << "m" << std::setw(4) << "r" << std::setw(12) << "seconds"
      << std::setw(14) << "objective" << "\n";
  bool any = false;
  for (const Family& f : families) {
    if (a.family != "all" && a.family != f.name) continue;
    any = true;
    for (const int n : a.sizes.empty() ? f.default_sizes : a.sizes) {
      GeneratorParams g;
      g.vertex_count = n;
      g.max_length = 10;
      g.max_weight = 5;
      g.seed = a.seed + static_cast<std::uint64_t>(n);
      if (f.name == "path") {
        g.kind = GeneratorKind::kPath;
        g.pair_count = std::max(1, n / 2);
      } else if (f.name == "spider3") {
        g.kind = GeneratorKind::kSpider;
        g.legs = 3;
        g.pair_count = std::max(1, n / 2);
      } else {
        g.kind = GeneratorKind::kRandomGraph;
        g.edge_count = std::min(4 * n, n * (n - 1) / 2);
        g.pair_count = 2;
      }
      const Instance inst = Generate(g);
      const auto start = std::chrono::steady_clock::now();
      std::int64_t objective;
      if (f.name == "fixed-r2") {
        FixedROptions opt;
        opt.threads = a.threads;
        objective = SolveFixedR(inst, opt).report.objective;
      } else {
        TreeSolverOptions opt;
        opt.threads = a.threads;
        objective = SolveTree(inst, opt).report.objective;
      }
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      char secs_text[32];
      std::snprintf(secs_text, sizeof(secs_text), "%.4f", secs);
      out << std::left << std::setw(10) << f.name << std::right << std::setw(6) << n
          << std::setw(7) << inst.network().edge_count() << std::setw(4) << inst.pair_count()
          << std::setw(12) << secs_text << std::setw(14) << objective << "\n";
    }
  }
  if (!any) throw InvalidInstanceError("unknown bench family '" + a.family + "'");
  return kOk;
}

int DoSelfTest(const SelfTestOptions& base, std::ostream& out) {
  SelfTestOptions opt = base;
  opt.on_result = [&out](const CriterionResult& r) { out << FormatCriterion(r) << std::endl; };
  const auto results = RunSelfTest(opt);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const CriterionResult& r) { return r.passed; });
  return ok ? kOk : kValidationFailed;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact edge build-order scheduling for network construction", "netcon"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "netcon 0.1.0");

  std::function<int()> action;

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Solve an instance exactly");
  cmd_solve->add_option("input", solve.input, "Instance file")->required();
  cmd_solve->add_option("-o,--output", solve.output, "Output file (default stdout)");
  cmd_solve->add_option("--backend", solve.backend, "Solver backend")
      ->check(CLI::IsMember({"auto", "tree", "fixed-r"}));
  cmd_solve->add_flag("--depot", solve.depot, "Use the common-vertex candidate bound");
  cmd_solve->add_option("--threads", solve.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  AddGuardFlags(cmd_solve, solve.guards);
  cmd_solve->callback([&] { action = [&] { return DoSolve(solve, out, err); }; });

  OracleArgs oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "Brute-force optimum of a small instance");
  cmd_oracle->add_option("input", oracle.input, "Instance file")->required();
  cmd_oracle->add_option("--method", oracle.method, "Oracle to run")
      ->check(CLI::IsMember({"subset", "permutation"}));
  cmd_oracle->add_flag("--sequence", oracle.show_sequence,
                       "Print the full report and an optimal sequence");
  AddGuardFlags(cmd_oracle, oracle.guards);
  cmd_oracle->callback([&] { action = [&] { return DoOracle(oracle, out); }; });

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a random instance");
  cmd_gen->add_option("--kind", gen.kind, "random_tree, star, path, spider or random_graph");
  cmd_gen->add_option("-n,--vertices", gen.params.vertex_count, "Vertex count")->required();
  cmd_gen->add_option("-m,--edges", gen.params.edge_count, "Edge count for random_graph");
  cmd_gen->add_option("--legs", gen.params.legs, "Leg count for spider");
  cmd_gen->add_option("-r,--pairs", gen.params.pair_count, "Relevant pair count");
  cmd_gen->add_option("--lengths", gen.lengths, "Length range MIN MAX")->expected(2);
  cmd_gen->add_option("--weights", gen.weights, "Weight range MIN MAX")->expected(2);
  cmd_gen->add_option("--dues", gen.dues, "Due date range MIN MAX")->expected(2);
  cmd_gen->add_option("--objective", gen.objective, "wct or maxlat");
  cmd_gen->add_option("--depot", gen.depot, "Make every pair share this vertex");
  cmd_gen->add_option("--seed", gen.params.seed, "Random seed");
  cmd_gen->add_option("-o,--output", gen.output, "Output file (default stdout)");
  cmd_gen->callback([&] { action = [&] { return DoGen(gen, out); }; });

  std::string ola_input;
  std::string ola_output;
  auto* cmd_ola = app.add_subcommand("reduce-ola", "Reduce linear arrangement to a star instance");
  cmd_ola->add_option("input", ola_input, "Arrangement file")->required();
  cmd_ola->add_option("-o,--output", ola_output, "Output file (default stdout)");
  cmd_ola->callback(
      [&] { action = [&] { return DoReduceOla(ola_input, ola_output, out, err); }; });

  std::string val_instance;
  std::string val_solution;
  auto* cmd_val = app.add_subcommand("validate", "Check a solution against an instance");
  cmd_val->add_option("instance", val_instance, "Instance file")->required();
  cmd_val->add_option("solution", val_solution, "Solution file")->required();
  cmd_val->callback(
      [&] { action = [&] { return DoValidate(val_instance, val_solution, out); }; });

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Print size-versus-time tables");
  cmd_bench->add_option("--family", bench.family, "all, path, spider3 or fixed-r2");
  cmd_bench->add_option("--sizes", bench.sizes, "Vertex counts to run");
  cmd_bench->add_option("--seed", bench.seed, "Random seed");
  cmd_bench->add_option("--threads", bench.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd_bench->callback([&] { action = [&] { return DoBench(bench, out); }; });

  SelfTestOptions selftest;
  auto* cmd_self = app.add_subcommand("selftest", "Run the acceptance suite");
  cmd_self->add_option("--seed", selftest.seed, "Random seed");
  cmd_self->add_option("--threads", selftest.threads, "Workers for the parallel runs")
      ->check(CLI::PositiveNumber);
  cmd_self->add_option("--only", selftest.only, "Criteria to run")->delimiter(',');
  cmd_self->add_option("--fixtures", selftest.fixture_paths,
                       "Instance files for the determinism check");
  cmd_self->callback([&] { action = [&] { return DoSelfTest(selftest, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "netcon 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    }
    return kUsage;
  }

  try {
    return action();
  } catch (const GuardExceededError& e) {
    err << "error: " << e.what() << " (pass --force to override)\n";
    return kGuardExceeded;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kValidationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace netcon::cli
