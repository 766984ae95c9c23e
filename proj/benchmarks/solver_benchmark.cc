// Copyright 2026 The Authors.
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

// Wall-clock microbenchmarks for the exact solvers on generated instances.
// Query counts are reported as counters; they are the quantity of interest,
// timings are secondary.

#include <benchmark/benchmark.h>

#include "matroid_union/generate.h"
#include "matroid_union/solve.h"

namespace matroid_union {
namespace {

void RunSolver(benchmark::State& state, Algorithm algorithm, GenKind kind) {
  const int n = static_cast<int>(state.range(0));
  const Instance base = GenerateInstance(kind, n, n, /*seed=*/7);
  std::int64_t queries = 0;
  int p = 0;
  for (auto _ : state) {
    Instance instance = base.Fresh();
    const SolveReport report = RunAlgorithm(algorithm, instance);
    queries = report.stats.independence_queries + report.stats.rank_queries;
    p = report.p;
    benchmark::DoNotOptimize(p);
  }
  state.counters["queries"] = static_cast<double>(queries);
  state.counters["p"] = p;
}

void BM_BlockFlowGraphic(benchmark::State& state) {
  RunSolver(state, Algorithm::kBlockFlowInd, GenKind::kGraphic);
}
void BM_CombinedGraphic(benchmark::State& state) {
  RunSolver(state, Algorithm::kCombined, GenKind::kGraphic);
}
void BM_RankGraphic(benchmark::State& state) {
  RunSolver(state, Algorithm::kBlockFlowRank, GenKind::kGraphic);
}
void BM_CombinedPartition(benchmark::State& state) {
  RunSolver(state, Algorithm::kCombined, GenKind::kPartition);
}
void BM_EdgeRecycleBinary(benchmark::State& state) {
  RunSolver(state, Algorithm::kEdgeRecycle, GenKind::kBinary);
}

BENCHMARK(BM_BlockFlowGraphic)->RangeMultiplier(2)->Range(16, 128)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CombinedGraphic)->RangeMultiplier(2)->Range(16, 128)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankGraphic)->RangeMultiplier(2)->Range(16, 64)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CombinedPartition)->RangeMultiplier(2)->Range(16, 128)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdgeRecycleBinary)->RangeMultiplier(2)->Range(16, 64)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace matroid_union

BENCHMARK_MAIN();
