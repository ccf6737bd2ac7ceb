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

#include "menumatch/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace menumatch {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kRatioTol = 1e-10;
constexpr int kStallLimit = 100;       // iterations without progress -> Bland
constexpr int kRefactorPeriod = 500;
constexpr long kMaxIterations = 500000;

struct SparseColumn {
  std::vector<std::pair<int, double>> entries;  // (row, value)
};

// How an original variable maps onto standardized columns.
struct VarMap {
  enum Kind { kShifted, kNegated, kSplit } kind = kShifted;
  int col = -1;       // primary column
  int neg_col = -1;   // second column for kSplit
  double offset = 0.0;
};

// Standard-form problem: minimize c.x, A x = b, x >= 0, with an initial
// basis of slacks and artificials.
class Simplex {
 public:
  Simplex(const LinearProgram& lp, double tol) : lp_(lp), tol_(tol) {
    standardize();
  }

  LpSolution run() {
    // Phase 1: minimize the artificial total.
    set_phase_costs(/*phase1=*/true);
    refactorize();
    const bool phase1_ok = iterate(/*phase1=*/true);
    if (!phase1_ok) throw std::runtime_error("simplex: phase 1 failed");
    double infeasibility = 0.0;
    for (int r = 0; r < nrows_; ++r) {
      if (is_artificial_[basis_[r]]) infeasibility += std::max(0.0, xb_[r]);
    }
    LpSolution solution;
    if (infeasibility > std::max(tol_, 1e-7)) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }

    // Phase 2: minimize the negated objective.
    set_phase_costs(/*phase1=*/false);
    refactorize();
    if (!iterate(/*phase1=*/false)) {
      solution.status = LpStatus::kUnbounded;
      return solution;
    }
    refactorize();

    solution.status = LpStatus::kOptimal;
    solution.x.assign(lp_.num_vars, 0.0);
    std::vector<double> std_x(ncols_, 0.0);
    for (int r = 0; r < nrows_; ++r) std_x[basis_[r]] = xb_[r];
    for (int k = 0; k < lp_.num_vars; ++k) {
      const VarMap& vm = var_map_[k];
      switch (vm.kind) {
        case VarMap::kShifted:
          solution.x[k] = vm.offset + std_x[vm.col];
          break;
        case VarMap::kNegated:
          solution.x[k] = vm.offset - std_x[vm.col];
          break;
        case VarMap::kSplit:
          solution.x[k] = std_x[vm.col] - std_x[vm.neg_col];
          break;
      }
      solution.value += lp_.objective[k] * solution.x[k];
    }
    return solution;
  }

 private:
  void add_entry(SparseColumn& col, int row, double value) {
    if (value != 0.0) col.entries.emplace_back(row, value);
  }

  void standardize() {
    // Row space: eq rows, le rows, then upper-bound rows added here.
    struct StdRow {
      std::vector<std::pair<int, double>> coeffs;  // on standardized columns
      double rhs = 0.0;
      bool is_eq = false;
    };
    std::vector<StdRow> rows;
    var_map_.resize(lp_.num_vars);

    int next_col = 0;
    std::vector<StdRow> bound_rows;
    for (int k = 0; k < lp_.num_vars; ++k) {
      const double lo = lp_.lower[k];
      const double hi = lp_.upper[k];
      if (lo > hi) throw std::invalid_argument("lp: variable with lo > hi");
      VarMap vm;
      if (lo > -kInfinity) {
        vm.kind = VarMap::kShifted;
        vm.offset = lo;
        vm.col = next_col++;
        if (hi < kInfinity) {
          StdRow row;
          row.coeffs.emplace_back(vm.col, 1.0);
          row.rhs = hi - lo;
          bound_rows.push_back(std::move(row));
        }
      } else if (hi < kInfinity) {
        vm.kind = VarMap::kNegated;
        vm.offset = hi;
        vm.col = next_col++;
      } else {
        vm.kind = VarMap::kSplit;
        vm.col = next_col++;
        vm.neg_col = next_col++;
      }
      var_map_[k] = vm;
    }
    num_structural_ = next_col;

    auto convert_row = [&](const LinearRow& row, bool is_eq) {
      StdRow out;
      out.is_eq = is_eq;
      out.rhs = row.rhs;
      for (const auto& [k, a] : row.coeffs) {
        if (k < 0 || k >= lp_.num_vars) {
          throw std::invalid_argument("lp: row references unknown variable");
        }
        const VarMap& vm = var_map_[k];
        switch (vm.kind) {
          case VarMap::kShifted:
            out.coeffs.emplace_back(vm.col, a);
            out.rhs -= a * vm.offset;
            break;
          case VarMap::kNegated:
            out.coeffs.emplace_back(vm.col, -a);
            out.rhs -= a * vm.offset;
            break;
          case VarMap::kSplit:
            out.coeffs.emplace_back(vm.col, a);
            out.coeffs.emplace_back(vm.neg_col, -a);
            break;
        }
      }
      rows.push_back(std::move(out));
    };
    for (const auto& row : lp_.eq_rows) convert_row(row, true);
    for (const auto& row : lp_.le_rows) convert_row(row, false);
    for (auto& row : bound_rows) rows.push_back(std::move(row));

    nrows_ = static_cast<int>(rows.size());
    // Columns: structural, then one slack per <= row, then artificials.
    columns_.resize(num_structural_);
    for (int r = 0; r < nrows_; ++r) {
      for (const auto& [c, a] : rows[r].coeffs) {
        add_entry(columns_[c], r, a);
      }
    }
    b_.resize(nrows_);
    basis_.assign(nrows_, -1);
    for (int r = 0; r < nrows_; ++r) {
      const bool flip = rows[r].rhs < 0.0;
      b_[r] = flip ? -rows[r].rhs : rows[r].rhs;
      if (flip) {
        for (auto& col : columns_) {
          for (auto& [row, value] : col.entries) {
            if (row == r) value = -value;
          }
        }
      }
      if (!rows[r].is_eq) {
        SparseColumn slack;
        add_entry(slack, r, flip ? -1.0 : 1.0);
        columns_.push_back(std::move(slack));
        if (!flip) basis_[r] = static_cast<int>(columns_.size()) - 1;
      }
    }
    num_real_ = static_cast<int>(columns_.size());
    is_artificial_.assign(num_real_, false);
    for (int r = 0; r < nrows_; ++r) {
      if (basis_[r] >= 0) continue;
      SparseColumn art;
      add_entry(art, r, 1.0);
      columns_.push_back(std::move(art));
      is_artificial_.push_back(true);
      basis_[r] = static_cast<int>(columns_.size()) - 1;
    }
    ncols_ = static_cast<int>(columns_.size());

    // Minimization costs for phase 2: negated original objective.
    phase2_cost_.assign(ncols_, 0.0);
    for (int k = 0; k < lp_.num_vars; ++k) {
      const VarMap& vm = var_map_[k];
      const double c = lp_.objective[k];
      switch (vm.kind) {
        case VarMap::kShifted:
          phase2_cost_[vm.col] += -c;
          break;
        case VarMap::kNegated:
          phase2_cost_[vm.col] += c;
          break;
        case VarMap::kSplit:
          phase2_cost_[vm.col] += -c;
          phase2_cost_[vm.neg_col] += c;
          break;
      }
    }
  }

  void set_phase_costs(bool phase1) {
    cost_.assign(ncols_, 0.0);
    if (phase1) {
      for (int j = 0; j < ncols_; ++j) {
        if (is_artificial_[j]) cost_[j] = 1.0;
      }
    } else {
      cost_ = phase2_cost_;
    }
  }

  // Rebuild the dense basis inverse by Gauss-Jordan and refresh xb.
  void refactorize() {
    const int n = nrows_;
    std::vector<double> mat(static_cast<std::size_t>(n) * 2 * n, 0.0);
    auto at = [&](int r, int c) -> double& {
      return mat[static_cast<std::size_t>(r) * 2 * n + c];
    };
    for (int r = 0; r < n; ++r) at(r, n + r) = 1.0;
    for (int r = 0; r < n; ++r) {
      for (const auto& [row, value] : columns_[basis_[r]].entries) {
        at(row, r) += value;  // duplicate indices in a row sum up
      }
    }
    for (int col = 0; col < n; ++col) {
      int pivot = col;
      for (int r = col + 1; r < n; ++r) {
        if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
      }
      if (std::abs(at(pivot, col)) < 1e-12) {
        throw std::runtime_error("simplex: singular basis");
      }
      if (pivot != col) {
        for (int c = 0; c < 2 * n; ++c) std::swap(at(pivot, c), at(col, c));
      }
      const double inv = 1.0 / at(col, col);
      for (int c = 0; c < 2 * n; ++c) at(col, c) *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        const double factor = at(r, col);
        if (factor == 0.0) continue;
        for (int c = 0; c < 2 * n; ++c) at(r, c) -= factor * at(col, c);
      }
    }
    binv_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        binv_[static_cast<std::size_t>(r) * n + c] = at(r, n + c);
      }
    }
    xb_.assign(n, 0.0);
    for (int r = 0; r < n; ++r) {
      double v = 0.0;
      for (int c = 0; c < n; ++c) {
        v += binv_[static_cast<std::size_t>(r) * n + c] * b_[c];
      }
      xb_[r] = v;
    }
  }

  std::vector<double> dual_prices() const {
    std::vector<double> y(nrows_, 0.0);
    for (int r = 0; r < nrows_; ++r) {
      const double cb = cost_[basis_[r]];
      if (cb == 0.0) continue;
      for (int c = 0; c < nrows_; ++c) {
        y[c] += cb * binv_[static_cast<std::size_t>(r) * nrows_ + c];
      }
    }
    return y;
  }

  double reduced_cost(int j, const std::vector<double>& y) const {
    double d = cost_[j];
    for (const auto& [row, value] : columns_[j].entries) {
      d -= y[row] * value;
    }
    return d;
  }

  // Returns false on unbounded (phase 2 only).
  bool iterate(bool phase1) {
    std::vector<bool> in_basis(ncols_, false);
    for (int r = 0; r < nrows_; ++r) in_basis[basis_[r]] = true;

    bool bland = false;
    int stall = 0;
    double last_objective = kInfinity;
    int since_refactor = 0;
    for (long iter = 0; iter < kMaxIterations; ++iter) {
      const auto y = dual_prices();
      int entering = -1;
      double best = -kPivotTol;
      for (int j = 0; j < ncols_; ++j) {
        if (in_basis[j]) continue;
        if (is_artificial_[j]) continue;  // artificials only ever leave
        const double d = reduced_cost(j, y);
        if (d < best) {
          if (bland) {
            entering = j;
            break;
          }
          best = d;
          entering = j;
        }
      }
      if (entering < 0) return true;  // optimal for this phase

      // Direction through the basis.
      std::vector<double> u(nrows_, 0.0);
      for (const auto& [row, value] : columns_[entering].entries) {
        for (int r = 0; r < nrows_; ++r) {
          u[r] += value * binv_[static_cast<std::size_t>(r) * nrows_ + row];
        }
      }

      // Ratio test. Basic artificials must stay at zero, so any row holding
      // one with a nonzero direction caps the step at zero and is preferred
      // as the leaving row.
      int leaving = -1;
      double step = kInfinity;
      bool leaving_artificial = false;
      for (int r = 0; r < nrows_; ++r) {
        const bool art = is_artificial_[basis_[r]];
        double ratio;
        if (u[r] > kRatioTol) {
          ratio = std::max(0.0, xb_[r]) / u[r];
        } else if (!phase1 && art && u[r] < -kRatioTol) {
          ratio = 0.0;
        } else {
          continue;
        }
        bool better = false;
        if (ratio < step - kRatioTol) {
          better = true;
        } else if (ratio <= step + kRatioTol) {
          if (art && !leaving_artificial) {
            better = true;
          } else if (art == leaving_artificial) {
            if (bland) {
              better = leaving < 0 || basis_[r] < basis_[leaving];
            } else {
              better = leaving < 0 ||
                       std::abs(u[r]) > std::abs(u[leaving]);
            }
          }
        }
        if (better) {
          step = std::min(step, std::max(ratio, 0.0));
          leaving = r;
          leaving_artificial = art;
        }
      }
      if (leaving < 0) {
        if (phase1) throw std::runtime_error("simplex: phase 1 unbounded");
        return false;  // unbounded
      }

      // Pivot: update basis, basic values and the inverse.
      const double pivot_value = u[leaving];
      if (std::abs(pivot_value) < kRatioTol) {
        throw std::runtime_error("simplex: zero pivot");
      }
      for (int r = 0; r < nrows_; ++r) {
        if (r == leaving) continue;
        xb_[r] -= step * u[r];
        if (xb_[r] < 0.0 && xb_[r] > -1e-11) xb_[r] = 0.0;
      }
      in_basis[basis_[leaving]] = false;
      in_basis[entering] = true;
      basis_[leaving] = entering;
      xb_[leaving] = step;
      double* pivot_row = &binv_[static_cast<std::size_t>(leaving) * nrows_];
      for (int c = 0; c < nrows_; ++c) pivot_row[c] /= pivot_value;
      for (int r = 0; r < nrows_; ++r) {
        if (r == leaving) continue;
        const double factor = u[r];  // pivot row already rescaled
        if (factor == 0.0) continue;
        double* row = &binv_[static_cast<std::size_t>(r) * nrows_];
        for (int c = 0; c < nrows_; ++c) row[c] -= factor * pivot_row[c];
      }

      if (++since_refactor >= kRefactorPeriod) {
        refactorize();
        since_refactor = 0;
      }

      // Anti-cycling: swap to Bland's rule when the objective stalls.
      double objective = 0.0;
      for (int r = 0; r < nrows_; ++r) objective += cost_[basis_[r]] * xb_[r];
      if (objective < last_objective - 1e-12) {
        stall = 0;
        last_objective = objective;
      } else if (!bland && ++stall >= kStallLimit) {
        bland = true;
      }
    }
    throw std::runtime_error("simplex: iteration limit reached");
  }

  const LinearProgram& lp_;
  double tol_;
  int nrows_ = 0;
  int ncols_ = 0;
  int num_structural_ = 0;
  int num_real_ = 0;  // structural + slack
  std::vector<SparseColumn> columns_;
  std::vector<double> b_;
  std::vector<double> cost_;
  std::vector<double> phase2_cost_;
  std::vector<bool> is_artificial_;
  std::vector<int> basis_;
  std::vector<double> binv_;  // row-major nrows x nrows
  std::vector<double> xb_;
  std::vector<VarMap> var_map_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double tol) {
  if (lp.num_vars == 0) {
    LpSolution trivial;
    for (const auto& row : lp.eq_rows) {
      if (std::abs(row.rhs) > tol) trivial.status = LpStatus::kInfeasible;
    }
    for (const auto& row : lp.le_rows) {
      if (row.rhs < -tol) trivial.status = LpStatus::kInfeasible;
    }
    return trivial;
  }
  Simplex solver(lp, tol);
  LpSolution solution = solver.run();
  if (solution.status == LpStatus::kOptimal) {
    if (max_violation(lp, solution.x) > std::max(tol, 1e-7)) {
      throw std::runtime_error("simplex: solution fails feasibility check");
    }
  }
  return solution;
}

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
  double worst = 0.0;
  auto row_value = [&](const LinearRow& row) {
    double v = 0.0;
    for (const auto& [k, a] : row.coeffs) v += a * x[k];
    return v;
  };
  for (const auto& row : lp.eq_rows) {
    worst = std::max(worst, std::abs(row_value(row) - row.rhs));
  }
  for (const auto& row : lp.le_rows) {
    worst = std::max(worst, row_value(row) - row.rhs);
  }
  for (int k = 0; k < lp.num_vars; ++k) {
    worst = std::max(worst, lp.lower[k] - x[k]);
    worst = std::max(worst, x[k] - lp.upper[k]);
  }
  return worst;
}

void write_lp_text(const LinearProgram& lp, std::ostream& out) {
  auto term = [&](double coef, int var, bool first) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", std::abs(coef));
    out << (coef < 0.0 ? (first ? "-" : "- ") : (first ? "" : "+ ")) << buffer
        << ' ' << lp.names[var] << ' ';
  };
  out << "Maximize\n obj: ";
  bool first = true;
  for (int k = 0; k < lp.num_vars; ++k) {
    if (lp.objective[k] == 0.0) continue;
    term(lp.objective[k], k, first);
    first = false;
  }
  if (first) out << "0 " << (lp.num_vars > 0 ? lp.names[0] : "x");
  out << "\nSubject To\n";
  char buffer[64];
  auto write_row = [&](const LinearRow& row, const char* op, int index,
                       const char* prefix) {
    out << ' ' << prefix << index << ": ";
    bool lead = true;
    for (const auto& [k, a] : row.coeffs) {
      if (a == 0.0) continue;
      term(a, k, lead);
      lead = false;
    }
    if (lead) out << "0 " << lp.names[0] << ' ';
    std::snprintf(buffer, sizeof(buffer), "%.17g", row.rhs);
    out << op << ' ' << buffer << '\n';
  };
  for (std::size_t r = 0; r < lp.eq_rows.size(); ++r) {
    write_row(lp.eq_rows[r], "=", static_cast<int>(r), "eq");
  }
  for (std::size_t r = 0; r < lp.le_rows.size(); ++r) {
    write_row(lp.le_rows[r], "<=", static_cast<int>(r), "le");
  }
  out << "Bounds\n";
  for (int k = 0; k < lp.num_vars; ++k) {
    const double lo = lp.lower[k];
    const double hi = lp.upper[k];
    if (lo <= -kInfinity && hi >= kInfinity) {
      out << ' ' << lp.names[k] << " free\n";
      continue;
    }
    out << ' ';
    if (lo > -kInfinity) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", lo);
      out << buffer << " <= ";
    }
    out << lp.names[k];
    if (hi < kInfinity) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", hi);
      out << " <= " << buffer;
    }
    out << '\n';
  }
  out << "End\n";
}

}  // namespace menumatch
