// Copyright 2026 The submax Authors.
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

#include "submax/independence.hpp"
#include "submax/instances.hpp"
#include "submax/objective.hpp"
#include "submax/sgs.hpp"

namespace {

// Diverse-summarization objective plus a cardinality limit of n/16: large
// enough that the lazy queue matters, small enough for quick iterations.
submax::Instance bench_instance(int n) {
  return submax::synthetic_diverse_instance(0xbe7c4, n, n / 16);
}

void BM_SimultaneousGreedys(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  submax::Instance inst = bench_instance(n);
  for (auto _ : state) {
    submax::CountedObjective f(inst.objective);
    submax::CountedIndependence indep(inst.constraint);
    submax::RunReport report =
        submax::simultaneous_greedys(inst.ground, f, indep, /*ell=*/2);
    benchmark::DoNotOptimize(report.value);
  }
}
BENCHMARK(BM_SimultaneousGreedys)->Arg(256)->Arg(512);

void BM_FastSgs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  submax::Instance inst = bench_instance(n);
  for (auto _ : state) {
    submax::CountedObjective f(inst.objective);
    submax::CountedIndependence indep(inst.constraint);
    submax::RunReport report =
        submax::fast_sgs(inst.ground, f, indep, /*ell=*/2, /*eps=*/0.1);
    benchmark::DoNotOptimize(report.value);
  }
}
BENCHMARK(BM_FastSgs)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
