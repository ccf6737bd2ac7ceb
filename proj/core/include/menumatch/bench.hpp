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

#ifndef MENUMATCH_BENCH_HPP_
#define MENUMATCH_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "menumatch/generators.hpp"
#include "menumatch/instance.hpp"

namespace menumatch {

// Assortment producers and bound columns the harness understands. Rows for
// the two bound labels are computed automatically when applicable.
//   alg1-greedy, alg1-cg : welfare pipeline (greedy / continuous greedy)
//   alg2, alg3           : LP rounding (unconstrained / budgeted)
//   alg4, alg5           : concave relaxation rounding
//   split                : high/low score combiner
//   vn, r1, r2           : baselines
inline const char* const kUpperBoundWelfareLabel = "ub-welfare";
inline const char* const kUpperBoundConcaveLabel = "ub-concave";

struct BenchCell {
  GenSpec gen;
  // Overrides BenchConfig::algorithms when nonempty.
  std::vector<std::string> algorithms;
};

struct BenchConfig {
  std::vector<BenchCell> cells;
  std::vector<std::string> algorithms;
  int instances_per_cell = 10;
  int rounding_seeds = 10;
  int mc_trials = 1000;
  std::uint64_t seed = 0;
};

// One aggregate per (cell, algorithm): mean/std across instances of the
// per-instance average value, plus mean solver cpu seconds per instance.
struct BenchRow {
  std::string family;
  int num_consumers = 0;
  int num_suppliers = 0;
  std::optional<double> lambda_v;
  std::optional<double> lambda_0;
  std::optional<int> budget;
  std::string algorithm;
  double mean = 0.0;
  double stddev = 0.0;
  double cpu_seconds = 0.0;
  std::string error;  // per-cell failures are recorded, not fatal
};

// Deterministic given config (instances, roundings and evaluation trials all
// derive their streams from config.seed). Values come from the exact
// evaluator when it is cheap and from mc_trials simulations otherwise.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// CSV with header family,n,m,lambda_v,lambda_0,K,algorithm,mean,std,cpu_s;
// floats carry 4 decimals.
std::string rows_to_csv(const std::vector<BenchRow>& rows);

// Desk-scale defaults: mnl-mnl and mnl-unif-k (K = 2) cells at
// n in {20, 30}, m = 20.
BenchConfig desk_bench_config(std::uint64_t seed);

}  // namespace menumatch

#endif  // MENUMATCH_BENCH_HPP_
