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

#ifndef MENUMATCH_INSTANCE_HPP_
#define MENUMATCH_INSTANCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "menumatch/choice.hpp"

namespace menumatch {

// A two-sided market: consumers receive menus of suppliers, pick at most one,
// then each supplier picks at most one of the consumers that requested it.
// All types here are immutable after construction and safe to share.
struct Instance {
  int num_consumers = 0;  // n
  int num_suppliers = 0;  // m
  std::vector<ChoiceModel> consumer_models;  // one per consumer, over suppliers
  std::vector<ChoiceModel> supplier_models;  // one per supplier, over consumers
  std::vector<double> revenues;              // r_j >= 0, one per supplier
  // Per-consumer menu-size caps; absent means unconstrained.
  std::optional<std::vector<int>> budgets;
};

// Total: never fails, returns one human-readable violation per broken
// invariant (empty list means the instance is well-formed).
std::vector<std::string> validate(const Instance& instance);

// One menu of suppliers per consumer; the decision variable.
struct AssortmentFamily {
  std::vector<std::vector<int>> menus;  // strictly increasing 0-based indices
};

// Entrywise [0,1] matrix produced by relaxations, consumed by rounding.
struct FractionalAssortment {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // row-major

  FractionalAssortment() = default;
  FractionalAssortment(int r, int c)
      : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, 0.0) {}

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * cols + j]; }
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * cols + j]; }
};

// Indicator matrix of a family. Throws std::out_of_range on a supplier index
// outside [0, num_suppliers).
FractionalAssortment to_indicator(const AssortmentFamily& family,
                                  int num_suppliers);

// Inverse of to_indicator for binary matrices: keep entries above threshold.
AssortmentFamily threshold_family(const FractionalAssortment& x,
                                  double threshold = 0.5);

// True when every menu is valid for the instance and within budget.
bool family_feasible(const Instance& instance, const AssortmentFamily& family);

// Expected matching revenue of one family. std_err is present only for
// Monte Carlo estimates; per_supplier already carries the revenue factor,
// so value equals the sum of per_supplier.
struct EvalResult {
  double value = 0.0;
  std::optional<double> std_err;
  std::vector<double> per_supplier;
};

}  // namespace menumatch

#endif  // MENUMATCH_INSTANCE_HPP_
