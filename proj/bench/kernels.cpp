/*
 * Copyright 2026 The Preserver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference vs OpenMP kernels. Thread count follows PRESERVER_THREADS.

#include <benchmark/benchmark.h>

#include <atomic>

#include "preserver/bruteforce.hpp"
#include "preserver/verify.hpp"

namespace {

using namespace preserver;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(thread_count()));
}

void BM_EnumerateGL3F3(benchmark::State& state) {
  for (auto _ : state) {
    std::atomic<std::uint64_t> n{0};
    enumerate_invertible(3, 3, [&](std::size_t, const SmallMatrix&) { n.fetch_add(1, std::memory_order_relaxed); },
                         mode(state));
    benchmark::DoNotOptimize(n.load());
  }
  label(state);
}
BENCHMARK(BM_EnumerateGL3F3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ScalarFixerCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(case_scalar_fixer(mode(state)).passed);
  label(state);
}
BENCHMARK(BM_ScalarFixerCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CubicOracleCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(case_cubic_oracles_f5(mode(state)).passed);
  label(state);
}
BENCHMARK(BM_CubicOracleCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CubicPreserverCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(case_cubic_preserver_census_f5(mode(state)).passed);
  label(state);
}
BENCHMARK(BM_CubicPreserverCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ForwardSuiteWedge36(benchmark::State& state) {
  const InvariantForm f = InvariantForm::wedge36(Field::prime(7));
  VerifyConfig cfg;
  cfg.field = f.field();
  cfg.trials = 16;
  cfg.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(forward_suite(f, Family::WedgePush, cfg).failures);
  label(state);
}
BENCHMARK(BM_ForwardSuiteWedge36)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CharacterSuiteSymm4(benchmark::State& state) {
  const InvariantForm f = InvariantForm::symm_det(4, Field::rationals());
  VerifyConfig cfg;
  cfg.field = f.field();
  cfg.trials = 32;
  cfg.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(character_suite(f, Family::Congruence, cfg).failures);
  label(state);
}
BENCHMARK(BM_CharacterSuiteSymm4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
