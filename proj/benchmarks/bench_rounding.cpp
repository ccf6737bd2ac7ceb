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

#include <benchmark/benchmark.h>

#include "menumatch/rng.hpp"
#include "menumatch/rounding.hpp"

namespace {

using namespace menumatch;

void BM_DependentRound(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  Rng rng(9);
  std::vector<double> x(size);
  for (double& v : x) v = rng.uniform01();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(round_dependent(x, seed++));
  }
}
BENCHMARK(BM_DependentRound)->Arg(8)->Arg(32)->Arg(128);

void BM_IndependentRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(9);
  FractionalAssortment x(n, 20);
  for (double& v : x.values) v = rng.uniform01();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(round_independent(x, seed++));
  }
}
BENCHMARK(BM_IndependentRound)->Arg(20)->Arg(50);

}  // namespace
