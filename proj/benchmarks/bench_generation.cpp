// Copyright 2026 The Quadforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "quadforge/canon.hpp"
#include "quadforge/equilibrium.hpp"
#include "quadforge/genesis.hpp"

namespace qf = quadforge;

namespace {

void BM_GenerateLevels(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto levels = qf::generate_levels(n);
    benchmark::DoNotOptimize(levels);
  }
}
BENCHMARK(BM_GenerateLevels)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
  const auto level = qf::generate_all(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& [code, map] : level.classes) {
      benchmark::DoNotOptimize(qf::canonical_code(map));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(level.size()));
}
BENCHMARK(BM_CanonicalCode)->Arg(7)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_SplitEnumeration(benchmark::State& state) {
  const auto level = qf::generate_all(8);
  for (auto _ : state) {
    long children = 0;
    for (const auto& [code, map] : level.classes) {
      for (const auto& walk : qf::enumerate_splits(map, 1, 3)) {
        benchmark::DoNotOptimize(qf::split(map, walk));
        ++children;
      }
    }
    state.counters["children"] = static_cast<double>(children);
  }
}
BENCHMARK(BM_SplitEnumeration)->Unit(benchmark::kMillisecond);

void BM_Ancestor(benchmark::State& state) {
  const auto level = qf::generate_all(9);
  for (auto _ : state) {
    for (const auto& [code, map] : level.classes) {
      benchmark::DoNotOptimize(qf::ancestor(map));
    }
  }
}
BENCHMARK(BM_Ancestor)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qf::census(n));
}
BENCHMARK(BM_Census)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
