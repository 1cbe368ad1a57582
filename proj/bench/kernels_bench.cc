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

// Serial and OpenMP versions of the two exhaustive kernels, side by side.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "matint/exchange.h"
#include "matint/greedy.h"
#include "matint/instance.h"
#include "matint/reference.h"

namespace {

matint::BuiltInstance Make(int n) {
  return matint::Build(matint::Generate({"graphic-partition", n, 3, {}}));
}

void BM_BruteForceSerial(benchmark::State& state) {
  auto b = Make(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matint::BruteForceMaxCommon(*b.m1, *b.m2));
  }
}

void BM_BruteForceParallel(benchmark::State& state) {
  auto b = Make(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matint::BruteForceMaxCommonParallel(*b.m1, *b.m2));
  }
}

void BM_BuildExplicitSerial(benchmark::State& state) {
  auto b = Make(static_cast<int>(state.range(0)));
  const auto s = matint::GreedyMaximalCommon(*b.m1, *b.m2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matint::BuildExplicit(*b.m1, *b.m2, s).arc_count());
  }
}

void BM_BuildExplicitParallel(benchmark::State& state) {
  auto b = Make(static_cast<int>(state.range(0)));
  const auto s = matint::GreedyMaximalCommon(*b.m1, *b.m2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        matint::BuildExplicitParallel(*b.m1, *b.m2, s).arc_count());
  }
}

BENCHMARK(BM_BruteForceSerial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildExplicitSerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildExplicitParallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
