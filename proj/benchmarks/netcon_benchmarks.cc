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

#include <benchmark/benchmark.h>

#include "netcon/chain_sched.h"
#include "netcon/generators.h"
#include "netcon/metric_closure.h"
#include "netcon/metric_solver.h"
#include "netcon/tree_solver.h"

namespace netcon {
namespace {

Instance Make(GeneratorKind kind, int n, int pairs, int edges = 0) {
  GeneratorParams g;
  g.kind = kind;
  g.vertex_count = n;
  g.edge_count = edges;
  g.legs = 3;
  g.max_length = 10;
  g.max_weight = 5;
  g.pair_count = pairs;
  g.seed = static_cast<std::uint64_t>(n);
  return Generate(g);
}

void BM_TreePath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = Make(GeneratorKind::kPath, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(SolveTree(inst).report.objective);
  state.SetComplexityN(n);
}
BENCHMARK(BM_TreePath)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_TreeSpider(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = Make(GeneratorKind::kSpider, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(SolveTree(inst).report.objective);
  state.SetComplexityN(n);
}
BENCHMARK(BM_TreeSpider)->DenseRange(15, 60, 15)->Unit(benchmark::kMillisecond);

void BM_MetricClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Network net = Make(GeneratorKind::kRandomGraph, n, 1, 4 * n).network();
  for (auto _ : state) benchmark::DoNotOptimize(MetricClosure(net).dist(0, n - 1));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MetricClosure)->RangeMultiplier(2)->Range(32, 256)->Complexity(benchmark::oNCubed);

void BM_FixedR(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const Instance inst = Make(GeneratorKind::kRandomGraph, n, r, 3 * n);
  for (auto _ : state) benchmark::DoNotOptimize(SolveFixedR(inst).report.objective);
}
BENCHMARK(BM_FixedR)
    ->ArgsProduct({{25, 50, 100, 150}, {2}})
    ->ArgsProduct({{10, 20}, {3}})
    ->Unit(benchmark::kMillisecond);

void BM_MergeTwoChains(benchmark::State& state) {
  const auto len = static_cast<int>(state.range(0));
  Rng rng(7);
  Chain a;
  Chain b;
  for (int i = 0; i < len; ++i) {
    a.push_back({rng.Uniform(1, 9), rng.Uniform(0, 9), i});
    b.push_back({rng.Uniform(1, 9), rng.Uniform(0, 9), len + i});
  }
  for (auto _ : state) benchmark::DoNotOptimize(MergeTwoChains(a, b).objective);
  state.SetComplexityN(len);
}
BENCHMARK(BM_MergeTwoChains)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

}  // namespace
}  // namespace netcon

BENCHMARK_MAIN();
