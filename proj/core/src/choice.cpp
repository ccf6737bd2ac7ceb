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

#include "menumatch/choice.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace menumatch {
namespace {

constexpr double kCheckerTol = 1e-12;

std::uint64_t table_key(std::uint32_t mask, int option) {
  // option kOutsideOption maps to slot 0, element k to slot k+1.
  return (static_cast<std::uint64_t>(mask) << 6) |
         static_cast<std::uint64_t>(option + 1);
}

bool in_menu(int option, std::span<const int> menu) {
  return std::binary_search(menu.begin(), menu.end(), option);
}

std::vector<int> mask_to_menu(std::uint32_t mask) {
  std::vector<int> menu;
  for (int k = 0; mask >> k; ++k) {
    if ((mask >> k) & 1u) menu.push_back(k);
  }
  return menu;
}

void require_checkable(int ground) {
  if (ground > kMaxCheckerGroundSize) {
    throw std::invalid_argument(
        "exhaustive checker refuses ground sets above " +
        std::to_string(kMaxCheckerGroundSize) + " (got " +
        std::to_string(ground) + ")");
  }
  if (ground < 0) throw std::invalid_argument("negative ground size");
}

double popular_prob(const PopularModel& model, int option, int menu_size,
                    bool popular_in_menu) {
  const double m = static_cast<double>(model.ground_size);
  if (popular_in_menu) {
    const double p_top = m / (2.0 * (m + 1.0));
    if (option == model.popular_index) return p_top;
    if (option == kOutsideOption) return 1.0 - p_top;
    return 0.0;
  }
  const double s = static_cast<double>(menu_size);
  const double p_each = 1.0 / (2.0 * (s + 1.0));
  if (option == kOutsideOption) return 1.0 - s * p_each;
  return p_each;
}

}  // namespace

void TabularModel::build_index() {
  index_.clear();
  index_.reserve(entries.size());
  for (const auto& [mask, option, prob] : entries) {
    index_[table_key(mask, option)] = prob;
  }
}

double TabularModel::lookup(std::uint32_t mask, int option) const {
  if (index_.empty() && !entries.empty()) {
    throw std::logic_error("TabularModel::build_index() was not called");
  }
  auto it = index_.find(table_key(mask, option));
  if (it == index_.end()) {
    throw std::domain_error("tabular model has no entry for this menu/option");
  }
  return it->second;
}

int ground_size(const ChoiceModel& model) {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MnlModel>) {
          return static_cast<int>(m.weights.size());
        } else if constexpr (std::is_same_v<T, UniformModel>) {
          return -1;  // any ground set
        } else {
          return m.ground_size;
        }
      },
      model);
}

double choice_prob(const ChoiceModel& model, int option,
                   std::span<const int> menu) {
  if (option != kOutsideOption && !in_menu(option, menu)) {
    throw std::domain_error("option not offered in menu");
  }
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MnlModel>) {
          double total = m.outside_weight;
          for (int j : menu) total += m.weights.at(j);
          if (option == kOutsideOption) return m.outside_weight / total;
          return m.weights.at(option) / total;
        } else if constexpr (std::is_same_v<T, UniformModel>) {
          const double total =
              static_cast<double>(menu.size()) + m.outside_weight;
          if (total <= 0.0) return option == kOutsideOption ? 1.0 : 0.0;
          if (option == kOutsideOption) return m.outside_weight / total;
          return 1.0 / total;
        } else if constexpr (std::is_same_v<T, TabularModel>) {
          std::uint32_t mask = 0;
          for (int j : menu) mask |= (1u << j);
          return m.lookup(mask, option);
        } else {
          const bool popular_in = in_menu(m.popular_index, menu);
          return popular_prob(m, option, static_cast<int>(menu.size()),
                              popular_in);
        }
      },
      model);
}

double demand(const ChoiceModel& model, std::span<const int> menu) {
  if (menu.empty()) return 0.0;
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MnlModel>) {
          double offered = 0.0;
          for (int j : menu) offered += m.weights.at(j);
          return offered / (m.outside_weight + offered);
        } else if constexpr (std::is_same_v<T, UniformModel>) {
          const double s = static_cast<double>(menu.size());
          return s / (s + m.outside_weight);
        } else if constexpr (std::is_same_v<T, TabularModel>) {
          double total = 0.0;
          for (int j : menu) total += choice_prob(model, j, menu);
          return total;
        } else {
          if (in_menu(m.popular_index, menu)) {
            const double g = static_cast<double>(m.ground_size);
            return g / (2.0 * (g + 1.0));
          }
          const double s = static_cast<double>(menu.size());
          return s / (2.0 * (s + 1.0));
        }
      },
      model);
}

double demand_mask(const ChoiceModel& model, std::uint32_t mask) {
  if (mask == 0) return 0.0;
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MnlModel>) {
          double offered = 0.0;
          for (int k = 0; mask >> k; ++k) {
            if ((mask >> k) & 1u) offered += m.weights.at(k);
          }
          return offered / (m.outside_weight + offered);
        } else if constexpr (std::is_same_v<T, UniformModel>) {
          const double s = static_cast<double>(std::popcount(mask));
          return s / (s + m.outside_weight);
        } else if constexpr (std::is_same_v<T, TabularModel>) {
          const auto menu = mask_to_menu(mask);
          double total = 0.0;
          for (int j : menu) total += m.lookup(mask, j);
          return total;
        } else {
          if ((mask >> m.popular_index) & 1u) {
            const double g = static_cast<double>(m.ground_size);
            return g / (2.0 * (g + 1.0));
          }
          const double s = static_cast<double>(std::popcount(mask));
          return s / (2.0 * (s + 1.0));
        }
      },
      model);
}

bool demand_depends_on_size_only(const ChoiceModel& model) {
  return std::holds_alternative<UniformModel>(model);
}

double demand_of_size(const ChoiceModel& model, int menu_size) {
  const auto& m = std::get<UniformModel>(model);
  if (menu_size <= 0) return 0.0;
  const double s = static_cast<double>(menu_size);
  return s / (s + m.outside_weight);
}

TabularModel tabulate(const ChoiceModel& model, int ground) {
  const int fixed = ground_size(model);
  if (ground < 0) ground = fixed;
  if (ground < 0) {
    throw std::invalid_argument(
        "tabulate needs an explicit ground size for this model");
  }
  if (fixed >= 0 && fixed != ground) {
    throw std::invalid_argument("ground size does not match the model");
  }
  require_checkable(ground);
  TabularModel out;
  out.ground_size = ground;
  for (std::uint32_t mask = 0; mask < (1u << ground); ++mask) {
    const auto menu = mask_to_menu(mask);
    out.entries.emplace_back(mask, kOutsideOption,
                             choice_prob(model, kOutsideOption, menu));
    for (int j : menu) {
      out.entries.emplace_back(mask, j, choice_prob(model, j, menu));
    }
  }
  out.build_index();
  return out;
}

bool is_regular(const TabularModel& model) {
  require_checkable(model.ground_size);
  const std::uint32_t full = (1u << model.ground_size) - 1u;
  for (std::uint32_t big = 0; big <= full; ++big) {
    // All sub-menus of big, including the empty one.
    std::uint32_t sub = big;
    while (true) {
      if (sub != big) {
        if (model.lookup(big, kOutsideOption) >
            model.lookup(sub, kOutsideOption) + kCheckerTol) {
          return false;
        }
        for (int j = 0; j < model.ground_size; ++j) {
          if (!((sub >> j) & 1u)) continue;
          if (model.lookup(big, j) > model.lookup(sub, j) + kCheckerTol) {
            return false;
          }
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & big;
    }
  }
  return true;
}

bool is_submodular_demand(const ChoiceModel& model, int ground) {
  require_checkable(ground);
  std::vector<double> q(std::size_t{1} << ground);
  for (std::uint32_t mask = 0; mask < (1u << ground); ++mask) {
    q[mask] = demand_mask(model, mask);
  }
  const std::uint32_t full = (1u << ground) - 1u;
  for (std::uint32_t big = 0; big <= full; ++big) {
    std::uint32_t sub = big;
    while (true) {
      for (int e = 0; e < ground; ++e) {
        const std::uint32_t bit = 1u << e;
        if (big & bit) continue;
        if (q[sub | bit] - q[sub] < q[big | bit] - q[big] - kCheckerTol) {
          return false;
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & big;
    }
  }
  return true;
}

bool is_easy_to_match(const ChoiceModel& model, int ground) {
  for (int e = 0; e < ground; ++e) {
    const int menu[1] = {e};
    if (choice_prob(model, e, menu) <
        choice_prob(model, kOutsideOption, menu) - kCheckerTol) {
      return false;
    }
  }
  return true;
}

}  // namespace menumatch
