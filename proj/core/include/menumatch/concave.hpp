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

#ifndef MENUMATCH_CONCAVE_HPP_
#define MENUMATCH_CONCAVE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "menumatch/instance.hpp"

namespace menumatch {

// Smooth relaxation for MNL consumers and MNL (or Uniform) suppliers:
//
//   max sum_j r_j * z_j / (z_j + u_j0),  z_j = sum_i u_ji v_ij y_ij
//   s.t. w_i + sum_j v_ij y_ij = 1,  0 <= y_ij <= w_i,
//        [sum_j y_ij <= K_i w_i when budgeted]
//
// The objective is concave in y and smooth on the polytope since u_j0 > 0;
// suppliers with u_j0 = 0 are rejected.
struct ConcaveAssortmentProgram {
  int num_consumers = 0;
  int num_suppliers = 0;
  std::vector<double> revenues;
  std::vector<double> consumer_scores;   // v_ij, consumer-major, v_i0 = 1
  std::vector<double> supplier_scores;   // u_ji, supplier-major
  std::vector<double> supplier_outside;  // u_j0 > 0
  std::optional<std::vector<int>> budgets;

  double v(int i, int j) const { return consumer_scores[static_cast<std::size_t>(i) * num_suppliers + j]; }
  double u(int j, int i) const { return supplier_scores[static_cast<std::size_t>(j) * num_consumers + i]; }
};

ConcaveAssortmentProgram make_concave_program(const Instance& instance,
                                              bool use_budgets);

double concave_objective(const ConcaveAssortmentProgram& program,
                         std::span<const double> y);

struct FrankWolfeConfig {
  int max_iters = 500;
  double tol = 1e-6;  // duality-gap stopping threshold
};

// Conditional gradient with step 2/(t+2). Each linearized subproblem is an
// LP over the program polytope (one independent block per consumer), solved
// with the in-repo simplex. Returns the best iterate; gap bounds the
// remaining suboptimality, so value + gap >= optimum.
struct FrankWolfeResult {
  std::vector<double> y;  // consumer-major
  std::vector<double> w;
  double value = 0.0;
  double gap = 0.0;
  int iterations = 0;
};
FrankWolfeResult maximize_concave(const ConcaveAssortmentProgram& program,
                                  const FrankWolfeConfig& config);

// Jensen bound for MNL suppliers: sum_j r_j T_j / (u_j0 + T_j) with
// T_j the expected requester score mass; always at least the exact value.
double mnl_supplier_upper_bound(const Instance& instance,
                                const AssortmentFamily& family);

// Solve the relaxation and recover x = y/w (row sums capped at the budgets
// when budgeted).
FractionalAssortment concave_fractional_solution(const Instance& instance,
                                                 const FrankWolfeConfig& config,
                                                 bool use_budgets);

// Solve the relaxation, recover x = y/w, round. Independent rounding for the
// unconstrained variant, per-consumer dependent rounding when budgeted.
AssortmentFamily concave_rounding_assortment(const Instance& instance,
                                             const FrankWolfeConfig& config,
                                             std::uint64_t seed);
AssortmentFamily concave_rounding_assortment_budgeted(
    const Instance& instance, const FrankWolfeConfig& config,
    std::uint64_t seed);

}  // namespace menumatch

#endif  // MENUMATCH_CONCAVE_HPP_
