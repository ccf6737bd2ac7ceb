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

#include "menumatch/baselines.hpp"
#include "menumatch/evaluate.hpp"
#include "menumatch/generators.hpp"
#include "menumatch/welfare.hpp"

namespace {

using namespace menumatch;

Instance desk_instance(InstanceFamily family, int n, int m, int budget = 0) {
  GenSpec spec;
  spec.family = family;
  spec.num_consumers = n;
  spec.num_suppliers = m;
  spec.budget = budget;
  spec.seed = 12345;
  return generate_instance(spec);
}

void BM_ExactEvaluateCounting(benchmark::State& state) {
  const Instance instance =
      desk_instance(InstanceFamily::kMnlUniform, static_cast<int>(state.range(0)), 20);
  const auto family = baseline_assortment(BaselineKind::kFullMenu, instance,
                                          nullptr, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_revenue_exact(instance, family).value);
  }
}
BENCHMARK(BM_ExactEvaluateCounting)->Arg(20)->Arg(50)->Arg(100);

void BM_Simulate1000(benchmark::State& state) {
  const Instance instance =
      desk_instance(InstanceFamily::kMnlMnl, static_cast<int>(state.range(0)), 20);
  const auto family = baseline_assortment(BaselineKind::kFullMenu, instance,
                                          nullptr, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(instance, family, 1000, 7).value);
  }
}
BENCHMARK(BM_Simulate1000)->Arg(20)->Arg(50);

void BM_GreedyWelfare(benchmark::State& state) {
  const Instance instance =
      desk_instance(InstanceFamily::kMnlMnl, static_cast<int>(state.range(0)), 20);
  const ContinuousGreedyConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        welfare_assortment(instance, WelfareSolver::kGreedy, config, 1));
  }
}
BENCHMARK(BM_GreedyWelfare)->Arg(20)->Arg(50);

}  // namespace
