// Copyright 2026 The Parity Factor Kit Authors.
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

#include "pfk/connectivity.h"
#include "pfk/factor_finder.h"
#include "pfk/generators.h"
#include "pfk/matching.h"
#include "pfk/parity_criteria.h"

namespace pfk {
namespace {

void BM_MaxMatching(benchmark::State& state) {
  const Graph g = RandomSimpleGraph(static_cast<int>(state.range(0)), 0.1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(MaxMatching(g).size());
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(2)->Range(64, 1024);

void BM_FindParityFactor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = RandomConnectedWithMinDegree(n, 2, 3, 11);
  const auto spec = CapUpperBounds(g, std::vector<int>(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(FindParityFactor(g, *spec));
}
BENCHMARK(BM_FindParityFactor)->RangeMultiplier(2)->Range(16, 256);

void BM_MaxEta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = RandomSimpleGraph(n, 0.4, 3);
  const auto spec = CapUpperBounds(g, std::vector<int>(n, 1));
  EnumerationLimits limits;
  limits.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(MaxEta(g, *spec, limits).value);
}
BENCHMARK(BM_MaxEta)->DenseRange(6, 12, 2);

void BM_MaxMinDegreeDeficiency(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = RandomSimpleGraph(n, 0.4, 5);
  EnumerationLimits limits;
  limits.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MaxMinDegreeDeficiency(g, std::vector<int>(n, 2), limits).value);
  }
}
BENCHMARK(BM_MaxMinDegreeDeficiency)->DenseRange(8, 18, 2);

void BM_EdgeConnectivity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = RandomKEdgeConnected(n, 4, 13);
  for (auto _ : state) benchmark::DoNotOptimize(EdgeConnectivity(g).value);
}
BENCHMARK(BM_EdgeConnectivity)->RangeMultiplier(2)->Range(16, 256);

}  // namespace
}  // namespace pfk

BENCHMARK_MAIN();
