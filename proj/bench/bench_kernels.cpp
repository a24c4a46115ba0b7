// Copyright 2026 The cgent Authors
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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "cgent/entropy.hpp"
#include "cgent/prob.hpp"

namespace {

using cgent::HalfInt;

HalfInt spin(const benchmark::State& state) { return HalfInt::from_twice(state.range(0)); }

const std::vector<double> kGrid{0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 3.0};

void BM_Bistochastic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cgent::build_bistochastic(spin(state), spin(state)));
}

void BM_BistochasticSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cgent::build_bistochastic_serial(spin(state), spin(state)));
}

void BM_Inequalities(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cgent::verify_inequalities(spin(state), spin(state), kGrid));
}

void BM_InequalitiesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cgent::verify_inequalities_serial(spin(state), spin(state), kGrid));
}

}  // namespace

BENCHMARK(BM_Bistochastic)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BistochasticSerial)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Inequalities)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InequalitiesSerial)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
