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

#ifndef MENUMATCH_MNL_LP_HPP_
#define MENUMATCH_MNL_LP_HPP_

#include <cstdint>

#include "menumatch/instance.hpp"
#include "menumatch/lp.hpp"

namespace menumatch {

// LP relaxation of the capped-hits bound for MNL consumers, after the
// fractional-programming substitution y_ij = x_ij / (1 + sum_l v_il x_il),
// w_i = 1 / (1 + sum_l v_il x_il):
//
//   max sum_j r_j z_j
//   s.t. z_j <= 1
//        z_j <= sum_i v_ij y_ij
//        w_i + sum_j v_ij y_ij = 1
//        0 <= y_ij <= w_i
//
// Variables are ordered w_0..w_{n-1}, then y row-major, then z. Throws when
// a consumer model is not MNL. The budgeted variant adds
// sum_j y_ij <= K_i w_i per consumer and requires budgets.
LinearProgram build_assortment_lp(const Instance& instance);
LinearProgram build_assortment_lp_budgeted(const Instance& instance);

// Variable offsets of the builders above.
int lp_var_w(const Instance& instance, int i);
int lp_var_y(const Instance& instance, int i, int j);
int lp_var_z(const Instance& instance, int j);

// x_ij = y*_ij / w*_i, clamped into [0,1]. Rows with a numerically vanishing
// w*_i come back all-zero (with a note on stderr); feasible LP solutions
// keep w*_i >= 1/(1 + sum_j v_ij) > 0.
FractionalAssortment recover_fractional(const LpSolution& solution,
                                        const Instance& instance);

// Solve the LP and recover the fractional assortment in one go. Budgeted
// solutions come back with row sums capped at the budgets.
FractionalAssortment lp_fractional_solution(const Instance& instance,
                                            bool budgeted);

// Solve the LP, recover the fractional assortment, round independently.
// Warns (stderr) outside the intended regime (some v_ij >= 1 or a supplier
// that is not easy-to-match) but still runs.
AssortmentFamily lp_rounding_assortment(const Instance& instance,
                                        std::uint64_t seed);

// Budgeted variant: dependent rounding per consumer row, so every menu
// respects its budget with probability one.
AssortmentFamily lp_rounding_assortment_budgeted(const Instance& instance,
                                                 std::uint64_t seed);

// Shared-score combiner: suppliers with v_j >= 1 are served by the welfare
// pipeline, suppliers with v_j < 1 by the LP pipeline; the better of the two
// completed families (exact evaluation, Monte Carlo fallback) is returned.
// Requires consumer scores shared across consumers (v_ij = v_j).
AssortmentFamily split_by_score_assortment(const Instance& instance,
                                           std::uint64_t seed);

}  // namespace menumatch

#endif  // MENUMATCH_MNL_LP_HPP_
