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

#ifndef MENUMATCH_LP_HPP_
#define MENUMATCH_LP_HPP_

#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace menumatch {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Maximization LP with equality rows, <= rows and per-variable bounds.
// Rows keep sparse coefficient lists; duplicate indices are summed.
struct LinearRow {
  std::vector<std::pair<int, double>> coeffs;
  double rhs = 0.0;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LinearRow> eq_rows;
  std::vector<LinearRow> le_rows;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::string> names;

  int add_variable(std::string name, double lo, double hi, double obj = 0.0) {
    names.push_back(std::move(name));
    lower.push_back(lo);
    upper.push_back(hi);
    objective.push_back(obj);
    return num_vars++;
  }
  void add_eq(LinearRow row) { eq_rows.push_back(std::move(row)); }
  void add_le(LinearRow row) { le_rows.push_back(std::move(row)); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  std::vector<double> x;
  double value = 0.0;
};

// Two-phase dense revised simplex (explicit basis inverse, periodic
// refactorization). Pricing starts with Dantzig's rule and falls back to
// Bland's rule permanently once the objective stalls, which guarantees
// termination. For optimal results, feasibility residuals are <= tol and
// all reduced costs certify optimality within tol.
LpSolution solve_lp(const LinearProgram& lp, double tol = 1e-9);

// Residual check helpers (also used by tests).
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

// Plain-text dump in CPLEX LP format, for cross-checks with external solvers.
void write_lp_text(const LinearProgram& lp, std::ostream& out);

}  // namespace menumatch

#endif  // MENUMATCH_LP_HPP_
