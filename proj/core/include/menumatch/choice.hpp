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

#ifndef MENUMATCH_CHOICE_HPP_
#define MENUMATCH_CHOICE_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

namespace menumatch {

// An agent facing a menu picks one offered option or the outside option.
// Option indices are 0-based; the outside option is kOutsideOption.
inline constexpr int kOutsideOption = -1;

// Menus passed to these routines are strictly increasing index lists.

// Multinomial logit: pick probability proportional to the option weight,
// normalized against outside_weight plus the total weight of the menu.
struct MnlModel {
  std::vector<double> weights;
  double outside_weight = 1.0;
};

// Pick uniformly among the offered options against outside_weight.
// An empty menu (or outside_weight 0 with an empty menu) always leaves.
struct UniformModel {
  double outside_weight = 0.0;
};

// Fully tabulated system of choice probabilities over a small ground set.
// Keys combine a menu bitmask (bit k <-> element k) with an option.
struct TabularModel {
  int ground_size = 0;
  // (mask, option, probability); option kOutsideOption for the outside row.
  std::vector<std::tuple<std::uint32_t, int, double>> entries;

  void build_index();
  double lookup(std::uint32_t mask, int option) const;

 private:
  std::unordered_map<std::uint64_t, double> index_;
};

// A single option absorbs all attention whenever shown; without it the pick
// spreads uniformly but stays below 1/2 in total.
struct PopularModel {
  int popular_index = 0;  // 0-based
  int ground_size = 0;
};

using ChoiceModel =
    std::variant<MnlModel, UniformModel, TabularModel, PopularModel>;

int ground_size(const ChoiceModel& model);

// p(option, menu). Throws std::domain_error when option is neither offered
// nor the outside option. Over menu + outside the values sum to 1.
double choice_prob(const ChoiceModel& model, int option,
                   std::span<const int> menu);

// Probability of picking anything at all: sum of in-menu probabilities.
double demand(const ChoiceModel& model, std::span<const int> menu);

// Same as demand(), menu given as a bitmask over the ground set.
double demand_mask(const ChoiceModel& model, std::uint32_t mask);

// True when the supplier-side demand ignores which agents are in the menu
// and depends on its size only (enables the counting-based evaluator path).
bool demand_depends_on_size_only(const ChoiceModel& model);
double demand_of_size(const ChoiceModel& model, int menu_size);

// Exhaustive tabulation of a model. Models without a fixed ground set
// (Uniform) need an explicit ground size; for the rest the argument, when
// given, must match. Refuses ground sets above kMaxCheckerGroundSize.
inline constexpr int kMaxCheckerGroundSize = 15;
TabularModel tabulate(const ChoiceModel& model, int ground = -1);

// Enlarging a menu never increases the probability of any fixed option
// (including outside). Checked exhaustively over all menu pairs.
bool is_regular(const TabularModel& model);

// Diminishing returns of the demand function, checked exhaustively:
// demand(A+e) - demand(A) >= demand(B+e) - demand(B) for all A <= B, e.
bool is_submodular_demand(const ChoiceModel& model, int ground);

// Facing any singleton menu, the agent picks the option with prob >= 1/2.
bool is_easy_to_match(const ChoiceModel& model, int ground);

}  // namespace menumatch

#endif  // MENUMATCH_CHOICE_HPP_
