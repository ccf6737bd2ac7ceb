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

#include "menumatch/mnl_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "menumatch/evaluate.hpp"
#include "menumatch/rng.hpp"
#include "menumatch/rounding.hpp"
#include "menumatch/welfare.hpp"

namespace menumatch {
namespace {

constexpr double kVanishingWeight = 1e-12;

// Consumer scores normalized to outside weight 1.
std::vector<std::vector<double>> normalized_scores(const Instance& instance) {
  std::vector<std::vector<double>> scores(instance.num_consumers);
  for (int i = 0; i < instance.num_consumers; ++i) {
    const auto* mnl = std::get_if<MnlModel>(&instance.consumer_models[i]);
    if (mnl == nullptr) {
      throw std::invalid_argument("consumer " + std::to_string(i) +
                                  " is not MNL");
    }
    if (!(mnl->outside_weight > 0.0)) {
      throw std::invalid_argument("consumer " + std::to_string(i) +
                                  " has nonpositive outside weight");
    }
    scores[i].resize(instance.num_suppliers);
    for (int j = 0; j < instance.num_suppliers; ++j) {
      scores[i][j] = mnl->weights.at(j) / mnl->outside_weight;
    }
  }
  return scores;
}

LinearProgram build_lp(const Instance& instance, bool budgeted) {
  if (budgeted && !instance.budgets) {
    throw std::invalid_argument("budgeted LP requires budgets");
  }
  const auto scores = normalized_scores(instance);
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;
  LinearProgram lp;
  for (int i = 0; i < n; ++i) {
    lp.add_variable("w_" + std::to_string(i + 1), 0.0, kInfinity);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      lp.add_variable("y_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                      0.0, kInfinity);
    }
  }
  for (int j = 0; j < m; ++j) {
    // z_j <= 1 is a row below; the lower bound is redundant for r_j >= 0 but
    // keeps the program in bounded form.
    lp.add_variable("z_" + std::to_string(j + 1), 0.0, kInfinity,
                    instance.revenues[j]);
  }
  const auto w_var = [&](int i) { return i; };
  const auto y_var = [&](int i, int j) { return n + i * m + j; };
  const auto z_var = [&](int j) { return n + n * m + j; };

  for (int j = 0; j < m; ++j) {
    lp.add_le({{{z_var(j), 1.0}}, 1.0});
    LinearRow cap;
    cap.coeffs.emplace_back(z_var(j), 1.0);
    for (int i = 0; i < n; ++i) {
      cap.coeffs.emplace_back(y_var(i, j), -scores[i][j]);
    }
    cap.rhs = 0.0;
    lp.add_le(std::move(cap));
  }
  for (int i = 0; i < n; ++i) {
    LinearRow total;
    total.coeffs.emplace_back(w_var(i), 1.0);
    for (int j = 0; j < m; ++j) {
      total.coeffs.emplace_back(y_var(i, j), scores[i][j]);
    }
    total.rhs = 1.0;
    lp.add_eq(std::move(total));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      lp.add_le({{{y_var(i, j), 1.0}, {w_var(i), -1.0}}, 0.0});
    }
  }
  if (budgeted) {
    for (int i = 0; i < n; ++i) {
      LinearRow budget;
      for (int j = 0; j < m; ++j) {
        budget.coeffs.emplace_back(y_var(i, j), 1.0);
      }
      budget.coeffs.emplace_back(w_var(i),
                                 -static_cast<double>((*instance.budgets)[i]));
      budget.rhs = 0.0;
      lp.add_le(std::move(budget));
    }
  }
  return lp;
}

void warn_outside_regime(const Instance& instance) {
  const auto scores = normalized_scores(instance);
  const bool high_score = std::any_of(
      scores.begin(), scores.end(), [](const std::vector<double>& row) {
        return std::any_of(row.begin(), row.end(),
                           [](double v) { return v >= 1.0; });
      });
  if (high_score) {
    std::fprintf(stderr,
                 "menumatch: warning: consumer score >= 1; the LP rounding "
                 "guarantee assumes scores below 1\n");
  }
  for (int j = 0; j < instance.num_suppliers; ++j) {
    if (!is_easy_to_match(instance.supplier_models[j], instance.num_consumers)) {
      std::fprintf(stderr,
                   "menumatch: warning: supplier %d is not easy-to-match; the "
                   "LP rounding guarantee does not apply\n",
                   j + 1);
      break;
    }
  }
}

LpSolution solve_or_throw(const LinearProgram& lp) {
  LpSolution solution = solve_lp(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw std::runtime_error("assortment LP did not solve to optimality");
  }
  return solution;
}

}  // namespace

LinearProgram build_assortment_lp(const Instance& instance) {
  return build_lp(instance, false);
}

LinearProgram build_assortment_lp_budgeted(const Instance& instance) {
  return build_lp(instance, true);
}

int lp_var_w(const Instance& instance, int i) {
  (void)instance;
  return i;
}

int lp_var_y(const Instance& instance, int i, int j) {
  return instance.num_consumers + i * instance.num_suppliers + j;
}

int lp_var_z(const Instance& instance, int j) {
  return instance.num_consumers +
         instance.num_consumers * instance.num_suppliers + j;
}

FractionalAssortment recover_fractional(const LpSolution& solution,
                                        const Instance& instance) {
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;
  FractionalAssortment x(n, m);
  for (int i = 0; i < n; ++i) {
    const double w = solution.x[lp_var_w(instance, i)];
    if (w < kVanishingWeight) {
      std::fprintf(stderr,
                   "menumatch: warning: vanishing w for consumer %d, zeroing "
                   "its fractional row\n",
                   i + 1);
      continue;
    }
    for (int j = 0; j < m; ++j) {
      x.at(i, j) =
          std::clamp(solution.x[lp_var_y(instance, i, j)] / w, 0.0, 1.0);
    }
  }
  return x;
}

FractionalAssortment lp_fractional_solution(const Instance& instance,
                                            bool budgeted) {
  if (budgeted && !instance.budgets) {
    throw std::invalid_argument("budgeted rounding requires budgets");
  }
  const auto solution = solve_or_throw(
      budgeted ? build_assortment_lp_budgeted(instance)
               : build_assortment_lp(instance));
  FractionalAssortment x = recover_fractional(solution, instance);
  // The LP keeps each row sum within its budget; rescale away any numerical
  // excess so sum-preservation never rounds above the budget.
  if (budgeted) cap_row_sums(x, *instance.budgets);
  return x;
}

AssortmentFamily lp_rounding_assortment(const Instance& instance,
                                        std::uint64_t seed) {
  warn_outside_regime(instance);
  return round_independent(lp_fractional_solution(instance, false), seed);
}

AssortmentFamily lp_rounding_assortment_budgeted(const Instance& instance,
                                                 std::uint64_t seed) {
  warn_outside_regime(instance);
  return round_dependent_rows(lp_fractional_solution(instance, true), seed);
}

namespace {

Instance supplier_subset(const Instance& instance,
                         const std::vector<int>& suppliers) {
  Instance sub;
  sub.num_consumers = instance.num_consumers;
  sub.num_suppliers = static_cast<int>(suppliers.size());
  sub.supplier_models.reserve(suppliers.size());
  sub.revenues.reserve(suppliers.size());
  for (int j : suppliers) {
    sub.supplier_models.push_back(instance.supplier_models[j]);
    sub.revenues.push_back(instance.revenues[j]);
  }
  for (int i = 0; i < instance.num_consumers; ++i) {
    const auto& mnl = std::get<MnlModel>(instance.consumer_models[i]);
    MnlModel restricted;
    restricted.outside_weight = mnl.outside_weight;
    restricted.weights.reserve(suppliers.size());
    for (int j : suppliers) restricted.weights.push_back(mnl.weights[j]);
    sub.consumer_models.emplace_back(std::move(restricted));
  }
  if (instance.budgets) {
    std::vector<int> budgets(*instance.budgets);
    for (int& k : budgets) k = std::min(k, std::max(1, sub.num_suppliers));
    sub.budgets = std::move(budgets);
  }
  return sub;
}

AssortmentFamily lift_menus(const AssortmentFamily& sub_family,
                            const std::vector<int>& suppliers, int n) {
  AssortmentFamily family;
  family.menus.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int local : sub_family.menus[i]) {
      family.menus[i].push_back(suppliers[local]);
    }
    std::sort(family.menus[i].begin(), family.menus[i].end());
  }
  return family;
}

double evaluate_candidate(const Instance& instance,
                          const AssortmentFamily& family, std::uint64_t seed) {
  if (exact_evaluation_available(instance, family)) {
    return expected_revenue_exact(instance, family).value;
  }
  return simulate(instance, family, 20000, seed).value;
}

}  // namespace

AssortmentFamily split_by_score_assortment(const Instance& instance,
                                           std::uint64_t seed) {
  const auto scores = normalized_scores(instance);
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (std::abs(scores[i][j] - scores[0][j]) > 1e-12) {
        throw std::invalid_argument(
            "split combiner requires consumer scores shared across consumers");
      }
    }
  }
  std::vector<int> high, low;
  for (int j = 0; j < m; ++j) {
    (scores[0][j] >= 1.0 ? high : low).push_back(j);
  }
  const ContinuousGreedyConfig default_cg;
  if (low.empty()) {
    return welfare_assortment(instance, WelfareSolver::kGreedy, default_cg,
                              seed);
  }
  if (high.empty()) {
    return instance.budgets ? lp_rounding_assortment_budgeted(instance, seed)
                            : lp_rounding_assortment(instance, seed);
  }

  const Instance high_side = supplier_subset(instance, high);
  const Instance low_side = supplier_subset(instance, low);
  const AssortmentFamily high_family = lift_menus(
      welfare_assortment(high_side, WelfareSolver::kGreedy, default_cg, seed),
      high, n);
  const AssortmentFamily low_family = lift_menus(
      instance.budgets ? lp_rounding_assortment_budgeted(low_side, seed)
                       : lp_rounding_assortment(low_side, seed),
      low, n);
  const double high_value =
      evaluate_candidate(instance, high_family, derive_seed(seed, 1));
  const double low_value =
      evaluate_candidate(instance, low_family, derive_seed(seed, 2));
  return high_value >= low_value ? high_family : low_family;
}

}  // namespace menumatch
