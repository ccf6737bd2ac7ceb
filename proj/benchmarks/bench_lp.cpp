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

#include "menumatch/concave.hpp"
#include "menumatch/generators.hpp"
#include "menumatch/lp.hpp"
#include "menumatch/mnl_lp.hpp"

namespace {

using namespace menumatch;

Instance desk_instance(int n, int m, int budget) {
  GenSpec spec;
  spec.family = budget > 0 ? InstanceFamily::kMnlUniformBudgeted
                           : InstanceFamily::kMnlUniform;
  spec.num_consumers = n;
  spec.num_suppliers = m;
  spec.budget = budget;
  spec.seed = 321;
  return generate_instance(spec);
}

void BM_SolveAssortmentLp(benchmark::State& state) {
  const Instance instance = desk_instance(static_cast<int>(state.range(0)), 20, 0);
  const auto lp = build_assortment_lp(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(lp).value);
  }
}
BENCHMARK(BM_SolveAssortmentLp)->Arg(10)->Arg(20)->Arg(30);

void BM_SolveBudgetedLp(benchmark::State& state) {
  const Instance instance = desk_instance(static_cast<int>(state.range(0)), 20, 2);
  const auto lp = build_assortment_lp_budgeted(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(lp).value);
  }
}
BENCHMARK(BM_SolveBudgetedLp)->Arg(10)->Arg(20)->Arg(30);

void BM_FrankWolfe(benchmark::State& state) {
  const Instance instance = desk_instance(static_cast<int>(state.range(0)), 20, 0);
  const auto program = make_concave_program(instance, false);
  FrankWolfeConfig config;
  config.max_iters = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_concave(program, config).value);
  }
}
BENCHMARK(BM_FrankWolfe)->Arg(10)->Arg(20);

}  // namespace
