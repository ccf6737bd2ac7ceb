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

#include "menumatch/concave.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "menumatch/lp.hpp"
#include "menumatch/rounding.hpp"

namespace menumatch {
namespace {

double supplier_score(const ChoiceModel& model, int consumer) {
  if (const auto* mnl = std::get_if<MnlModel>(&model)) {
    return mnl->weights.at(consumer);
  }
  if (std::holds_alternative<UniformModel>(model)) return 1.0;
  throw std::invalid_argument("supplier model is not MNL or Uniform");
}

double supplier_outside_score(const ChoiceModel& model) {
  if (const auto* mnl = std::get_if<MnlModel>(&model)) {
    return mnl->outside_weight;
  }
  if (const auto* uni = std::get_if<UniformModel>(&model)) {
    return uni->outside_weight;
  }
  throw std::invalid_argument("supplier model is not MNL or Uniform");
}

std::vector<double> score_mass(const ConcaveAssortmentProgram& program,
                               std::span<const double> y) {
  std::vector<double> z(program.num_suppliers, 0.0);
  for (int i = 0; i < program.num_consumers; ++i) {
    for (int j = 0; j < program.num_suppliers; ++j) {
      z[j] += program.u(j, i) * program.v(i, j) *
              y[static_cast<std::size_t>(i) * program.num_suppliers + j];
    }
  }
  return z;
}

// One consumer's block of the polytope, with the gradient as objective.
LinearProgram build_block_lp(const ConcaveAssortmentProgram& program,
                             int consumer, std::span<const double> gradient) {
  const int m = program.num_suppliers;
  LinearProgram lp;
  const int w = lp.add_variable("w", 0.0, kInfinity);
  for (int j = 0; j < m; ++j) {
    lp.add_variable("y_" + std::to_string(j + 1), 0.0, kInfinity,
                    gradient[static_cast<std::size_t>(consumer) * m + j]);
  }
  LinearRow total;
  total.coeffs.emplace_back(w, 1.0);
  for (int j = 0; j < m; ++j) {
    total.coeffs.emplace_back(1 + j, program.v(consumer, j));
  }
  total.rhs = 1.0;
  lp.add_eq(std::move(total));
  for (int j = 0; j < m; ++j) {
    lp.add_le({{{1 + j, 1.0}, {w, -1.0}}, 0.0});
  }
  if (program.budgets) {
    LinearRow budget;
    for (int j = 0; j < m; ++j) budget.coeffs.emplace_back(1 + j, 1.0);
    budget.coeffs.emplace_back(
        w, -static_cast<double>((*program.budgets)[consumer]));
    budget.rhs = 0.0;
    lp.add_le(std::move(budget));
  }
  return lp;
}

FractionalAssortment fractional_from_result(const FrankWolfeResult& result,
                                            int n, int m) {
  FractionalAssortment x(n, m);
  for (int i = 0; i < n; ++i) {
    const double w = result.w[i];
    if (w < 1e-12) continue;
    for (int j = 0; j < m; ++j) {
      x.at(i, j) = std::clamp(
          result.y[static_cast<std::size_t>(i) * m + j] / w, 0.0, 1.0);
    }
  }
  return x;
}

}  // namespace

ConcaveAssortmentProgram make_concave_program(const Instance& instance,
                                              bool use_budgets) {
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;
  ConcaveAssortmentProgram program;
  program.num_consumers = n;
  program.num_suppliers = m;
  program.revenues = instance.revenues;
  program.consumer_scores.resize(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i) {
    const auto* mnl = std::get_if<MnlModel>(&instance.consumer_models[i]);
    if (mnl == nullptr) {
      throw std::invalid_argument("consumer " + std::to_string(i) +
                                  " is not MNL");
    }
    for (int j = 0; j < m; ++j) {
      program.consumer_scores[static_cast<std::size_t>(i) * m + j] =
          mnl->weights.at(j) / mnl->outside_weight;
    }
  }
  program.supplier_scores.resize(static_cast<std::size_t>(m) * n);
  program.supplier_outside.resize(m);
  for (int j = 0; j < m; ++j) {
    const auto& model = instance.supplier_models[j];
    program.supplier_outside[j] = supplier_outside_score(model);
    if (!(program.supplier_outside[j] > 0.0)) {
      throw std::invalid_argument(
          "supplier " + std::to_string(j) +
          " has outside score 0; the smooth objective needs u_j0 > 0");
    }
    for (int i = 0; i < n; ++i) {
      program.supplier_scores[static_cast<std::size_t>(j) * n + i] =
          supplier_score(model, i);
    }
  }
  if (use_budgets) {
    if (!instance.budgets) {
      throw std::invalid_argument("budgeted relaxation requires budgets");
    }
    program.budgets = instance.budgets;
  }
  return program;
}

double concave_objective(const ConcaveAssortmentProgram& program,
                         std::span<const double> y) {
  const auto z = score_mass(program, y);
  double total = 0.0;
  for (int j = 0; j < program.num_suppliers; ++j) {
    total += program.revenues[j] * z[j] / (z[j] + program.supplier_outside[j]);
  }
  return total;
}

FrankWolfeResult maximize_concave(const ConcaveAssortmentProgram& program,
                                  const FrankWolfeConfig& config) {
  if (config.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  const int n = program.num_consumers;
  const int m = program.num_suppliers;
  const std::size_t size = static_cast<std::size_t>(n) * m;

  FrankWolfeResult best;
  std::vector<double> y(size, 0.0);
  std::vector<double> w(n, 1.0);
  best.y = y;
  best.w = w;
  best.value = concave_objective(program, y);
  best.gap = kInfinity;

  std::vector<double> gradient(size);
  std::vector<double> target_y(size);
  std::vector<double> target_w(n);
  for (int t = 0; t < config.max_iters; ++t) {
    const auto z = score_mass(program, y);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        const double denom = z[j] + program.supplier_outside[j];
        gradient[static_cast<std::size_t>(i) * m + j] =
            program.revenues[j] * program.u(j, i) * program.v(i, j) *
            program.supplier_outside[j] / (denom * denom);
      }
    }

    // The polytope is a product of per-consumer blocks, so the linearized
    // subproblem splits into one small LP per consumer.
    double gap = 0.0;
    for (int i = 0; i < n; ++i) {
      const LpSolution block = solve_lp(build_block_lp(program, i, gradient));
      if (block.status != LpStatus::kOptimal) {
        throw std::runtime_error("frank-wolfe block LP failed");
      }
      target_w[i] = block.x[0];
      for (int j = 0; j < m; ++j) {
        target_y[static_cast<std::size_t>(i) * m + j] = block.x[1 + j];
      }
      for (int j = 0; j < m; ++j) {
        const std::size_t idx = static_cast<std::size_t>(i) * m + j;
        gap += gradient[idx] * (target_y[idx] - y[idx]);
      }
    }

    const double value = concave_objective(program, y);
    if (value > best.value) {
      best.value = value;
      best.y = y;
      best.w = w;
    }
    best.gap = std::min(best.gap, std::max(gap, 0.0));
    best.iterations = t;
    if (gap <= config.tol) break;

    const double step = 2.0 / (t + 2.0);
    for (std::size_t k = 0; k < size; ++k) {
      y[k] += step * (target_y[k] - y[k]);
    }
    for (int i = 0; i < n; ++i) w[i] += step * (target_w[i] - w[i]);
  }

  const double final_value = concave_objective(program, y);
  if (final_value > best.value) {
    best.value = final_value;
    best.y = y;
    best.w = w;
  }
  return best;
}

double mnl_supplier_upper_bound(const Instance& instance,
                                const AssortmentFamily& family) {
  double total = 0.0;
  for (int j = 0; j < instance.num_suppliers; ++j) {
    const auto& model = instance.supplier_models[j];
    const double outside = supplier_outside_score(model);
    double mass = 0.0;
    for (int i = 0; i < instance.num_consumers; ++i) {
      const auto& menu = family.menus[i];
      if (!std::binary_search(menu.begin(), menu.end(), j)) continue;
      mass += supplier_score(model, i) *
              choice_prob(instance.consumer_models[i], j, menu);
    }
    if (mass > 0.0) {
      total += instance.revenues[j] * mass / (outside + mass);
    }
  }
  return total;
}

FractionalAssortment concave_fractional_solution(const Instance& instance,
                                                 const FrankWolfeConfig& config,
                                                 bool use_budgets) {
  if (use_budgets && !instance.budgets) {
    throw std::invalid_argument("budgeted rounding requires budgets");
  }
  const auto program = make_concave_program(instance, use_budgets);
  const auto result = maximize_concave(program, config);
  FractionalAssortment x = fractional_from_result(
      result, instance.num_consumers, instance.num_suppliers);
  if (use_budgets) cap_row_sums(x, *instance.budgets);
  return x;
}

AssortmentFamily concave_rounding_assortment(const Instance& instance,
                                             const FrankWolfeConfig& config,
                                             std::uint64_t seed) {
  return round_independent(concave_fractional_solution(instance, config, false),
                           seed);
}

AssortmentFamily concave_rounding_assortment_budgeted(
    const Instance& instance, const FrankWolfeConfig& config,
    std::uint64_t seed) {
  return round_dependent_rows(concave_fractional_solution(instance, config, true),
                              seed);
}

}  // namespace menumatch
