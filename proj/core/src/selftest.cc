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

#include "netcon/selftest.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "netcon/chain_sched.h"
#include "netcon/evaluator.h"
#include "netcon/generators.h"
#include "netcon/instance_io.h"
#include "netcon/metric_solver.h"
#include "netcon/ola_reduction.h"
#include "netcon/oracle.h"
#include "netcon/tree_solver.h"

namespace netcon {
namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `body`, which returns the failure count and fills `detail`; a criterion
// passes with zero failures inside its time budget.
template <typename Body>
CriterionResult Run(int id, std::string name, double budget_seconds, Body&& body) {
  CriterionResult res;
  res.id = id;
  res.name = std::move(name);
  const auto start = Clock::now();
  std::ostringstream detail;
  long failures = 0;
  try {
    failures = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
    failures = -1;
  }
  res.seconds = Since(start);
  if (failures == 0 && res.seconds > budget_seconds) {
    detail << "; over budget of " << budget_seconds << " s";
    failures = 1;
  }
  res.passed = failures == 0;
  res.detail = detail.str();
  return res;
}

Chain RandomChain(Rng& rng, int length, std::int64_t max_p, std::int64_t max_w) {
  Chain chain;
  for (int i = 0; i < length; ++i) {
    chain.push_back({rng.Uniform(1, max_p), rng.Uniform(0, max_w), i});
  }
  return chain;
}

long TreeExactness(Rng& rng, std::ostream& detail) {
  long mismatches = 0;
  constexpr int kTrials = 200;
  for (int trial = 0; trial < kTrials; ++trial) {
    GeneratorParams g;
    g.kind = GeneratorKind::kRandomTree;
    g.vertex_count = static_cast<int>(rng.Uniform(2, 9));
    g.min_length = 1;
    g.max_length = 10;
    g.min_weight = 1;
    g.max_weight = 5;
    const int max_pairs = std::min(8, g.vertex_count * (g.vertex_count - 1) / 2);
    g.pair_count = static_cast<int>(rng.Uniform(1, max_pairs));
    g.seed = rng.Next();
    const Instance inst = Generate(g);
    TreeSolverOptions opt;
    opt.force = true;
    const auto dp = SolveTree(inst, opt).report.objective;
    const auto oracle = SubsetDp(inst).objective;
    if (dp != oracle && mismatches++ == 0) {
      detail << "first mismatch: tree " << dp << " vs oracle " << oracle << " on\n"
             << WriteInstance(inst);
    }
  }
  detail << kTrials << " random trees, " << mismatches << " mismatches";
  return mismatches;
}

struct FixedRStats {
  long mismatches = 0;
  long projection_violations = 0;
  long pruned_edges = 0;
  long instances = 0;
};

FixedRStats FixedRExactness(Rng& rng, std::ostream& detail) {
  FixedRStats stats;
  constexpr int kTrials = 100;
  for (int trial = 0; trial < kTrials; ++trial) {
    GeneratorParams g;
    g.kind = GeneratorKind::kRandomGraph;
    g.vertex_count = static_cast<int>(rng.Uniform(4, 8));
    const int max_m = std::min(14, g.vertex_count * (g.vertex_count - 1) / 2);
    g.edge_count = static_cast<int>(rng.Uniform(g.vertex_count - 1, max_m));
    g.min_length = 1;
    g.max_length = 10;
    g.min_weight = 1;
    g.max_weight = 5;
    g.pair_count = static_cast<int>(rng.Uniform(2, 3));
    const bool depot_layout = trial % 2 == 1;
    if (depot_layout) {
      g.depot = static_cast<VertexId>(rng.Uniform(0, g.vertex_count - 1));
    }
    g.seed = rng.Next();
    const Instance inst = Generate(g);
    ++stats.instances;

    const auto oracle = SubsetDp(inst).objective;
    std::vector<FixedRSolution> runs;
    runs.push_back(SolveFixedR(inst));
    if (depot_layout) {
      FixedROptions opt;
      opt.depot_mode = true;
      runs.push_back(SolveFixedR(inst, opt));
    }
    for (const auto& sol : runs) {
      if (sol.report.objective != oracle && stats.mismatches++ == 0) {
        detail << "first mismatch: fixed-r " << sol.report.objective << " vs oracle "
               << oracle << " on\n"
               << WriteInstance(inst);
      }
      if (sol.projected.evaluation.value > sol.metric_evaluation.value) {
        ++stats.projection_violations;
      }
      stats.pruned_edges += sol.projected.pruned;
    }
  }
  return stats;
}

long MergeOptimality(Rng& rng, std::ostream& detail) {
  long mismatches = 0;
  constexpr int kTrials = 500;
  for (int trial = 0; trial < kTrials; ++trial) {
    const int total = static_cast<int>(rng.Uniform(0, 12));
    const int split = static_cast<int>(rng.Uniform(0, total));
    const Chain a = RandomChain(rng, split, 9, 9);
    const Chain b = RandomChain(rng, total - split, 9, 9);
    const MergedSchedule merged = MergeTwoChains(a, b);
    const std::int64_t oracle = InterleavingOracle(a, b);
    if (merged.objective != oracle) ++mismatches;
  }
  detail << kTrials << " chain pairs, " << mismatches << " mismatches";
  return mismatches;
}

// Quadratic check of one decomposition; returns a description of the first
// problem or an empty string.
std::string CheckDecomposition(const Chain& chain, const std::vector<DensityBlock>& blocks) {
  size_t pos = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const DensityBlock& b = blocks[i];
    if (b.begin != pos || b.end <= b.begin) return "blocks not consecutive";
    std::int64_t p = 0;
    std::int64_t w = 0;
    Density best{0, 1};
    bool first = true;
    for (size_t j = b.begin; j < chain.size(); ++j) {
      p += chain[j].processing;
      w += chain[j].weight;
      const Density d{w, p};
      if (first || d > best) best = d;
      first = false;
      if (j + 1 == b.end && (p != b.processing || w != b.weight)) return "block totals wrong";
    }
    if (!(b.density() == best)) return "block is not a maximum-density initial block";
    if (i > 0 && !(blocks[i - 1].density() > b.density())) {
      return "densities not strictly decreasing";
    }
    pos = b.end;
  }
  if (pos != chain.size()) return "blocks do not cover the chain";
  return {};
}

long DecompositionCorrectness(Rng& rng, std::ostream& detail) {
  long failures = 0;
  constexpr int kTrials = 500;
  for (int trial = 0; trial < kTrials; ++trial) {
    const Chain chain = RandomChain(rng, static_cast<int>(rng.Uniform(0, 12)), 9, 9);
    const std::string problem = CheckDecomposition(chain, DensityDecomposition(chain));
    if (!problem.empty() && failures++ == 0) detail << "first failure: " << problem << "; ";
  }
  detail << kTrials << " chains, " << failures << " failures";
  return failures;
}

long ReductionIdentity(std::ostream& detail) {
  long failures = 0;
  long graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& edges : NonIsomorphicGraphs(n)) {
      ++graphs;
      OlaInput ola{n, edges, 0};
      const std::int64_t expected = OlaOptimum(ola) + OlaOffset(n);
      const OlaReduction red = ReduceOla(ola);
      const std::int64_t got = SubsetDp(red.instance).objective;
      if (got != expected && failures++ == 0) {
        detail << "first failure on n=" << n << ": oracle " << got << " vs " << expected
               << "; ";
      }
    }
  }
  detail << graphs << " graphs, " << failures << " failures";
  return failures;
}

long ComplexitySmoke(Rng& rng, std::ostream& detail) {
  long failures = 0;
  bool first = true;
  auto timed = [&](const char* label, double budget, auto&& fn) {
    const auto start = Clock::now();
    fn();
    const double s = Since(start);
    char text[96];
    std::snprintf(text, sizeof(text), "%s%s %.2f s (budget %.0f)", first ? "" : "; ", label, s,
                  budget);
    first = false;
    detail << text;
    if (s >= budget) ++failures;
  };

  GeneratorParams path;
  path.kind = GeneratorKind::kPath;
  path.vertex_count = 200;
  path.max_length = 10;
  path.max_weight = 5;
  path.pair_count = 100;
  path.seed = rng.Next();
  const Instance path_inst = Generate(path);
  timed("path n=200", 30.0, [&] { SolveTree(path_inst); });

  GeneratorParams legs = path;
  legs.kind = GeneratorKind::kSpider;
  legs.legs = 3;
  legs.vertex_count = 60;
  legs.pair_count = 30;
  legs.seed = rng.Next();
  const Instance spider = Generate(legs);
  if (spider.network().leaf_count() != 3) ++failures;
  timed("3-leaf tree n=60", 60.0, [&] { SolveTree(spider); });

  GeneratorParams graph;
  graph.kind = GeneratorKind::kRandomGraph;
  graph.vertex_count = 150;
  graph.edge_count = 600;
  graph.max_length = 10;
  graph.max_weight = 5;
  graph.pair_count = 2;
  graph.seed = rng.Next();
  const Instance graph_inst = Generate(graph);
  timed("fixed-r r=2 n=150", 60.0, [&] { SolveFixedR(graph_inst); });
  return failures;
}

std::vector<Instance> DeterminismFixtures(Rng& rng, const std::vector<std::string>& paths) {
  std::vector<Instance> out;
  for (const auto& p : paths) out.push_back(ParseInstance(ReadFile(p)));
  for (int i = 0; i < 6; ++i) {
    GeneratorParams g;
    g.kind = i % 2 == 0 ? GeneratorKind::kRandomTree : GeneratorKind::kRandomGraph;
    g.vertex_count = static_cast<int>(rng.Uniform(5, 10));
    g.edge_count = g.vertex_count + 2;
    g.max_length = 4;  // short lengths make ties likely
    g.max_weight = 3;
    g.pair_count = 3;
    g.seed = rng.Next();
    out.push_back(Generate(g));
  }
  return out;
}

long Determinism(Rng& rng, const SelfTestOptions& options, std::ostream& detail) {
  long failures = 0;
  long runs = 0;
  for (const Instance& inst : DeterminismFixtures(rng, options.fixture_paths)) {
    std::vector<std::string> backends;
    if (inst.network().is_tree() && inst.objective() == Objective::kWeightedSum) {
      backends.push_back("tree");
    }
    if (inst.pair_count() <= 4) backends.push_back("fixed-r");
    if (inst.network().edge_count() <= 22) backends.push_back("oracle");
    for (const auto& backend : backends) {
      const std::string serial = SolverOutput(inst, backend, 1);
      const std::string again = SolverOutput(inst, backend, 1);
      const std::string parallel = SolverOutput(inst, backend, std::max(2, options.threads));
      runs += 3;
      if (serial != again || serial != parallel) {
        if (failures++ == 0) detail << "first difference: backend " << backend << "; ";
      }
    }
  }
  detail << runs << " runs, " << failures << " differing fixtures";
  return failures;
}

}  // namespace

std::string SolverOutput(const Instance& instance, const std::string& backend, int threads) {
  if (backend == "tree") {
    TreeSolverOptions opt;
    opt.force = true;
    opt.threads = threads;
    const TreeSolution sol = SolveTree(instance, opt);
    return FormatSolution(instance, sol.report, sol.sequence);
  }
  if (backend == "fixed-r") {
    FixedROptions opt;
    opt.threads = threads;
    const FixedRSolution sol = SolveFixedR(instance, opt);
    return FormatSolution(instance, sol.report, sol.sequence);
  }
  const OracleSolution sol = SubsetDp(instance);
  return FormatSolution(instance, EvaluateSequence(instance, sol.sequence), sol.sequence);
}

std::vector<std::vector<std::pair<VertexId, VertexId>>> NonIsomorphicGraphs(int vertex_count) {
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId a = 0; a < vertex_count; ++a) {
    for (VertexId b = a + 1; b < vertex_count; ++b) slots.emplace_back(a, b);
  }
  std::vector<int> perm(static_cast<size_t>(vertex_count));
  std::set<std::uint32_t> canon_seen;
  std::vector<std::vector<std::pair<VertexId, VertexId>>> out;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    // Canonical form: smallest relabelled mask over all permutations.
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t canon = ~0U;
    do {
      std::uint32_t relabelled = 0;
      for (size_t s = 0; s < slots.size(); ++s) {
        if (!(mask >> s & 1U)) continue;
        VertexId a = perm[static_cast<size_t>(slots[s].first)];
        VertexId b = perm[static_cast<size_t>(slots[s].second)];
        if (a > b) std::swap(a, b);
        const auto it = std::find(slots.begin(), slots.end(), std::pair(a, b));
        relabelled |= 1U << (it - slots.begin());
      }
      canon = std::min(canon, relabelled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!canon_seen.insert(canon).second) continue;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1U) edges.push_back(slots[s]);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

std::string FormatCriterion(const CriterionResult& result) {
  char secs[32];
  std::snprintf(secs, sizeof(secs), "%.2f", result.seconds);
  return std::string(result.passed ? "[PASS] " : "[FAIL] ") + std::to_string(result.id) +
         " " + result.name + " (" + secs + " s): " + result.detail;
}

std::vector<CriterionResult> RunSelfTest(const SelfTestOptions& options) {
  std::vector<CriterionResult> results;
  auto wanted = [&](int id) {
    return options.only.empty() ||
           std::find(options.only.begin(), options.only.end(), id) != options.only.end();
  };
  auto record = [&](CriterionResult r) {
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  };
  // Each criterion draws from its own stream so subsets reproduce.
  auto rng_for = [&](int id) { return Rng(options.seed * 1000003ULL + static_cast<std::uint64_t>(id)); };

  if (wanted(1)) {
    Rng rng = rng_for(1);
    record(Run(1, "tree-solver exactness", 60.0,
               [&](std::ostream& d) { return TreeExactness(rng, d); }));
  }
  FixedRStats fixed_stats;
  double fixed_seconds = 0.0;
  if (wanted(2) || wanted(6)) {
    Rng rng = rng_for(2);
    CriterionResult r = Run(2, "fixed-r exactness", 120.0, [&](std::ostream& d) {
      fixed_stats = FixedRExactness(rng, d);
      d << fixed_stats.instances << " graphs (general + common-vertex), "
        << fixed_stats.mismatches << " mismatches";
      return fixed_stats.mismatches;
    });
    fixed_seconds = r.seconds;
    if (wanted(2)) record(r);
    if (wanted(6)) {
      CriterionResult p;
      p.id = 6;
      p.name = "projection inequality";
      p.seconds = fixed_seconds;
      p.passed = r.detail.find("exception") == std::string::npos &&
                 fixed_stats.projection_violations == 0 && fixed_stats.instances > 0;
      p.detail = std::to_string(fixed_stats.instances) + " instances, " +
                 std::to_string(fixed_stats.projection_violations) + " violations, " +
                 std::to_string(fixed_stats.pruned_edges) + " edges pruned after projection";
      record(p);
    }
  }
  if (wanted(3)) {
    Rng rng = rng_for(3);
    record(Run(3, "two-chain merge optimality", 30.0,
               [&](std::ostream& d) { return MergeOptimality(rng, d); }));
  }
  if (wanted(4)) {
    Rng rng = rng_for(4);
    record(Run(4, "density decomposition correctness", 10.0,
               [&](std::ostream& d) { return DecompositionCorrectness(rng, d); }));
  }
  if (wanted(5)) {
    record(Run(5, "reduction identity", 60.0,
               [&](std::ostream& d) { return ReductionIdentity(d); }));
  }
  if (wanted(7)) {
    Rng rng = rng_for(7);
    // Budgets are checked per instance inside.
    record(Run(7, "complexity smoke tests", 150.0,
               [&](std::ostream& d) { return ComplexitySmoke(rng, d); }));
  }
  if (wanted(8)) {
    Rng rng = rng_for(8);
    record(Run(8, "determinism", 120.0,
               [&](std::ostream& d) { return Determinism(rng, options, d); }));
  }
  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

}  // namespace netcon
