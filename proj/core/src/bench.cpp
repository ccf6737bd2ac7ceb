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

#include "menumatch/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <stdexcept>
#include <string>

#include "menumatch/baselines.hpp"
#include "menumatch/concave.hpp"
#include "menumatch/evaluate.hpp"
#include "menumatch/mnl_lp.hpp"
#include "menumatch/rng.hpp"
#include "menumatch/rounding.hpp"
#include "menumatch/welfare.hpp"

namespace menumatch {
namespace {

constexpr int kCheapEnumerationSupport = 12;

bool is_baseline(const std::string& label) {
  return label == "vn" || label == "r1" || label == "r2";
}

bool cheap_exact(const Instance& instance, const AssortmentFamily& family) {
  const bool all_size_based = std::all_of(
      instance.supplier_models.begin(), instance.supplier_models.end(),
      [](const ChoiceModel& m) { return demand_depends_on_size_only(m); });
  if (all_size_based) return true;
  std::vector<int> support(instance.num_suppliers, 0);
  for (const auto& menu : family.menus) {
    for (int j : menu) support[j] += 1;
  }
  return *std::max_element(support.begin(), support.end()) <=
         kCheapEnumerationSupport;
}

double evaluate_family(const Instance& instance, const AssortmentFamily& family,
                       int mc_trials, std::uint64_t seed) {
  if (cheap_exact(instance, family)) {
    return expected_revenue_exact(instance, family).value;
  }
  return simulate(instance, family, mc_trials, seed).value;
}

// All solutions an algorithm produces for one instance. Relaxation-based
// algorithms solve once and round per seed, mirroring the study protocol.
std::vector<AssortmentFamily> produce_families(
    const std::string& label, const Instance& instance,
    const AssortmentFamily* reference, int rounding_seeds,
    std::uint64_t base_seed) {
  std::vector<AssortmentFamily> families;
  families.reserve(rounding_seeds);
  const ContinuousGreedyConfig cg;
  const FrankWolfeConfig fw;
  auto seed_for = [&](int s) {
    return derive_seed(base_seed, static_cast<std::uint64_t>(s));
  };

  if (label == "alg2" || label == "alg3") {
    const FractionalAssortment x =
        lp_fractional_solution(instance, label == "alg3");
    for (int s = 0; s < rounding_seeds; ++s) {
      families.push_back(label == "alg3" ? round_dependent_rows(x, seed_for(s))
                                         : round_independent(x, seed_for(s)));
    }
    return families;
  }
  if (label == "alg4" || label == "alg5") {
    const FractionalAssortment x =
        concave_fractional_solution(instance, fw, label == "alg5");
    for (int s = 0; s < rounding_seeds; ++s) {
      families.push_back(label == "alg5" ? round_dependent_rows(x, seed_for(s))
                                         : round_independent(x, seed_for(s)));
    }
    return families;
  }
  for (int s = 0; s < rounding_seeds; ++s) {
    const std::uint64_t seed = seed_for(s);
    if (label == "alg1-greedy") {
      families.push_back(
          welfare_assortment(instance, WelfareSolver::kGreedy, cg, seed));
    } else if (label == "alg1-cg") {
      families.push_back(welfare_assortment(
          instance, WelfareSolver::kContinuousGreedy, cg, seed));
    } else if (label == "split") {
      families.push_back(split_by_score_assortment(instance, seed));
    } else if (label == "vn") {
      families.push_back(baseline_assortment(BaselineKind::kFullMenu, instance,
                                             nullptr, seed));
    } else if (label == "r1") {
      families.push_back(baseline_assortment(BaselineKind::kHalfRandom,
                                             instance, nullptr, seed));
    } else if (label == "r2") {
      families.push_back(baseline_assortment(BaselineKind::kSizeMatchedRandom,
                                             instance, reference, seed));
    } else {
      throw std::invalid_argument("unknown algorithm label: " + label);
    }
  }
  return families;
}

struct Aggregate {
  std::vector<double> per_instance_means;
  double cpu_total = 0.0;
  std::string error;
};

void finish_row(BenchRow& row, const Aggregate& agg, int instances) {
  if (!agg.error.empty()) {
    row.mean = std::nan("");
    row.stddev = std::nan("");
    row.cpu_seconds = std::nan("");
    row.error = agg.error;
    return;
  }
  double sum = 0.0;
  for (double v : agg.per_instance_means) sum += v;
  row.mean = sum / instances;
  double ss = 0.0;
  for (double v : agg.per_instance_means) {
    ss += (v - row.mean) * (v - row.mean);
  }
  row.stddev = instances > 1 ? std::sqrt(ss / (instances - 1)) : 0.0;
  row.cpu_seconds = agg.cpu_total / instances;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (std::size_t cell_idx = 0; cell_idx < config.cells.size(); ++cell_idx) {
    const BenchCell& cell = config.cells[cell_idx];
    const std::vector<std::string>& labels =
        cell.algorithms.empty() ? config.algorithms : cell.algorithms;

    std::vector<std::string> row_labels = {kUpperBoundWelfareLabel,
                                           kUpperBoundConcaveLabel};
    row_labels.insert(row_labels.end(), labels.begin(), labels.end());
    std::vector<Aggregate> aggregates(row_labels.size());

    // r2 copies the menu sizes of the first non-baseline label.
    int reference_idx = -1;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      if (!is_baseline(labels[a])) {
        reference_idx = static_cast<int>(a);
        break;
      }
    }

    for (int inst = 0; inst < config.instances_per_cell; ++inst) {
      GenSpec gen = cell.gen;
      gen.seed = derive_seed(config.seed, cell_idx, 0x696e7374ULL,
                             static_cast<std::uint64_t>(inst));
      const Instance instance = generate_instance(gen);
      const bool budgeted = instance.budgets.has_value();

      // Bound columns.
      {
        Aggregate& agg = aggregates[0];
        if (agg.error.empty()) {
          const std::clock_t start = std::clock();
          try {
            agg.per_instance_means.push_back(welfare_upper_bound(instance));
            agg.cpu_total +=
                static_cast<double>(std::clock() - start) / CLOCKS_PER_SEC;
          } catch (const std::exception& e) {
            agg.error = e.what();
          }
        }
      }
      {
        Aggregate& agg = aggregates[1];
        if (agg.error.empty()) {
          const std::clock_t start = std::clock();
          try {
            const auto program = make_concave_program(instance, budgeted);
            const auto result = maximize_concave(program, FrankWolfeConfig{});
            agg.per_instance_means.push_back(result.value + result.gap);
            agg.cpu_total +=
                static_cast<double>(std::clock() - start) / CLOCKS_PER_SEC;
          } catch (const std::exception& e) {
            agg.error = e.what();
          }
        }
      }

      std::vector<AssortmentFamily> reference_families;
      for (std::size_t a = 0; a < labels.size(); ++a) {
        Aggregate& agg = aggregates[2 + a];
        if (!agg.error.empty()) continue;
        const std::uint64_t family_seed =
            derive_seed(config.seed, cell_idx, 0x616c67ULL,
                        static_cast<std::uint64_t>(inst), a);
        try {
          const AssortmentFamily* reference = nullptr;
          if (labels[a] == "r2") {
            if (reference_idx < 0) {
              throw std::invalid_argument("r2 requires a non-baseline label");
            }
            if (reference_families.empty()) {
              throw std::invalid_argument("r2 reference failed");
            }
            reference = &reference_families.front();
          }
          const std::clock_t start = std::clock();
          auto families = produce_families(labels[a], instance, reference,
                                           config.rounding_seeds, family_seed);
          agg.cpu_total +=
              static_cast<double>(std::clock() - start) / CLOCKS_PER_SEC;
          double value_sum = 0.0;
          for (std::size_t s = 0; s < families.size(); ++s) {
            if (!family_feasible(instance, families[s])) {
              throw std::runtime_error("produced an infeasible family");
            }
            value_sum += evaluate_family(
                instance, families[s], config.mc_trials,
                derive_seed(config.seed, cell_idx, 0x6576616cULL,
                            static_cast<std::uint64_t>(inst), a,
                            static_cast<std::uint64_t>(s)));
          }
          agg.per_instance_means.push_back(value_sum / families.size());
          if (static_cast<int>(a) == reference_idx) {
            reference_families = std::move(families);
          }
        } catch (const std::exception& e) {
          agg.error = e.what();
          std::fprintf(stderr, "menumatch: bench cell %zu, %s: %s\n", cell_idx,
                       labels[a].c_str(), e.what());
        }
      }
    }

    for (std::size_t r = 0; r < row_labels.size(); ++r) {
      BenchRow row;
      row.family = family_label(cell.gen.family);
      row.num_consumers = cell.gen.num_consumers;
      row.num_suppliers = cell.gen.num_suppliers;
      if (cell.gen.family != InstanceFamily::kMnlMnl) {
        const bool fixed_rates =
            cell.gen.family == InstanceFamily::kMnlUniformBudgeted;
        row.lambda_v = fixed_rates ? 1.0 : cell.gen.lambda_v;
        row.lambda_0 = fixed_rates ? 1.0 : cell.gen.lambda_0;
      }
      if (cell.gen.family == InstanceFamily::kMnlUniformBudgeted) {
        row.budget = cell.gen.budget;
      }
      row.algorithm = row_labels[r];
      finish_row(row, aggregates[r], config.instances_per_cell);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::string csv = "family,n,m,lambda_v,lambda_0,K,algorithm,mean,std,cpu_s\n";
  char buffer[64];
  auto format = [&](double v) -> std::string {
    std::snprintf(buffer, sizeof(buffer), "%.4f", v);
    return buffer;
  };
  for (const auto& row : rows) {
    csv += row.family;
    csv += ',' + std::to_string(row.num_consumers);
    csv += ',' + std::to_string(row.num_suppliers);
    csv += ',';
    if (row.lambda_v) csv += format(*row.lambda_v);
    csv += ',';
    if (row.lambda_0) csv += format(*row.lambda_0);
    csv += ',';
    if (row.budget) csv += std::to_string(*row.budget);
    csv += ',' + row.algorithm;
    csv += ',' + format(row.mean);
    csv += ',' + format(row.stddev);
    csv += ',' + format(row.cpu_seconds);
    csv += '\n';
  }
  return csv;
}

BenchConfig desk_bench_config(std::uint64_t seed) {
  BenchConfig config;
  config.seed = seed;
  config.instances_per_cell = 10;
  config.rounding_seeds = 10;
  config.mc_trials = 1000;
  for (int n : {20, 30}) {
    BenchCell cell;
    cell.gen.family = InstanceFamily::kMnlMnl;
    cell.gen.num_consumers = n;
    cell.gen.num_suppliers = 20;
    cell.algorithms = {"alg1-greedy", "alg4", "vn", "r1", "r2"};
    config.cells.push_back(std::move(cell));
  }
  for (int n : {20, 30}) {
    BenchCell cell;
    cell.gen.family = InstanceFamily::kMnlUniformBudgeted;
    cell.gen.num_consumers = n;
    cell.gen.num_suppliers = 20;
    cell.gen.budget = 2;
    cell.algorithms = {"alg3", "alg5", "r1"};
    config.cells.push_back(std::move(cell));
  }
  return config;
}

}  // namespace menumatch
