/* Copyright 2026 The compdet Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Serial reference against the OpenMP Bareiss kernels. On a single core the
// parallel variant should only pay the scheduling overhead.

#include <benchmark/benchmark.h>

#include "compdet/det.h"
#include "compdet/pcmatrix.h"

namespace {

using namespace compdet;

void BM_SymbolicSerial(benchmark::State& state) {
  const PolyMatrix m = build_general(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss_serial(m));
}

void BM_SymbolicParallel(benchmark::State& state) {
  const PolyMatrix m = build_general(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}

IntMatrix point_matrix(int n, int p) {
  std::vector<BigInt> point;
  for (int j = 0; j < p; ++j) point.emplace_back(17 * j - 401);
  return specialize(build_general(n, p), point);
}

void BM_IntegerSerial(benchmark::State& state) {
  const IntMatrix m = point_matrix(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss_serial(m));
}

void BM_IntegerParallel(benchmark::State& state) {
  const IntMatrix m = point_matrix(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}

}  // namespace

BENCHMARK(BM_SymbolicSerial)->Args({3, 3})->Args({4, 2})->Args({4, 3})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolicParallel)->Args({3, 3})->Args({4, 2})->Args({4, 3})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegerSerial)->Args({7, 3})->Args({6, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegerParallel)->Args({7, 3})->Args({6, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
