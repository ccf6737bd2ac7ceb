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

#include "menumatch/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace menumatch {
namespace {

// Ground-set and weight checks shared by both sides.
void validate_model(const ChoiceModel& model, int expected_ground,
                    bool consumer_side, const std::string& where,
                    std::vector<std::string>& out) {
  const int g = ground_size(model);
  if (g >= 0 && g != expected_ground) {
    out.push_back(where + " ground set has size " + std::to_string(g) +
                  ", expected " + std::to_string(expected_ground));
  }
  if (const auto* mnl = std::get_if<MnlModel>(&model)) {
    for (std::size_t k = 0; k < mnl->weights.size(); ++k) {
      if (!(mnl->weights[k] > 0.0)) {
        out.push_back(where + " weight[" + std::to_string(k) +
                      "] not positive");
      }
    }
    if (consumer_side && !(mnl->outside_weight > 0.0)) {
      out.push_back(where + " outside_weight not positive");
    }
    if (!consumer_side && mnl->outside_weight < 0.0) {
      out.push_back(where + " outside_weight negative");
    }
  } else if (const auto* uni = std::get_if<UniformModel>(&model)) {
    if (uni->outside_weight < 0.0) {
      out.push_back(where + " outside_weight negative");
    }
  } else if (const auto* tab = std::get_if<TabularModel>(&model)) {
    for (const auto& [mask, option, prob] : tab->entries) {
      if (prob < -1e-12 || prob > 1.0 + 1e-12) {
        out.push_back(where + " probability out of [0,1]");
        break;
      }
    }
    // Each menu's probabilities over menu + outside must sum to 1.
    if (tab->ground_size >= 0 && tab->ground_size <= kMaxCheckerGroundSize) {
      for (std::uint32_t mask = 0; mask < (1u << tab->ground_size); ++mask) {
        double total = 0.0;
        bool missing = false;
        try {
          total = tab->lookup(mask, kOutsideOption);
          for (int j = 0; j < tab->ground_size; ++j) {
            if ((mask >> j) & 1u) total += tab->lookup(mask, j);
          }
        } catch (const std::exception&) {
          missing = true;
        }
        if (missing) {
          out.push_back(where + " table misses menu mask " +
                        std::to_string(mask));
        } else if (std::abs(total - 1.0) > 1e-9) {
          out.push_back(where + " menu mask " + std::to_string(mask) +
                        " probabilities sum to " + std::to_string(total));
        }
      }
    } else {
      out.push_back(where + " tabular ground set out of range");
    }
  } else if (const auto* pop = std::get_if<PopularModel>(&model)) {
    if (pop->popular_index < 0 || pop->popular_index >= pop->ground_size) {
      out.push_back(where + " popular_index out of range");
    }
  }
}

}  // namespace

std::vector<std::string> validate(const Instance& instance) {
  std::vector<std::string> out;
  if (instance.num_consumers < 1) out.push_back("n < 1");
  if (instance.num_suppliers < 1) out.push_back("m < 1");
  if (static_cast<int>(instance.consumer_models.size()) !=
      instance.num_consumers) {
    out.push_back("consumer_models size != n");
  }
  if (static_cast<int>(instance.supplier_models.size()) !=
      instance.num_suppliers) {
    out.push_back("supplier_models size != m");
  }
  if (static_cast<int>(instance.revenues.size()) != instance.num_suppliers) {
    out.push_back("revenues size != m");
  }
  for (std::size_t j = 0; j < instance.revenues.size(); ++j) {
    if (!(instance.revenues[j] >= 0.0)) {
      out.push_back("revenues[" + std::to_string(j) + "] negative");
    }
  }
  if (instance.budgets) {
    if (static_cast<int>(instance.budgets->size()) != instance.num_consumers) {
      out.push_back("budgets size != n");
    }
    for (std::size_t i = 0; i < instance.budgets->size(); ++i) {
      const int k = (*instance.budgets)[i];
      if (k < 1) {
        out.push_back("budgets[" + std::to_string(i) + "] < 1");
      } else if (k > instance.num_suppliers) {
        out.push_back("budgets[" + std::to_string(i) + "] > m");
      }
    }
  }
  for (std::size_t i = 0; i < instance.consumer_models.size(); ++i) {
    validate_model(instance.consumer_models[i], instance.num_suppliers, true,
                   "consumers[" + std::to_string(i) + "]", out);
  }
  for (std::size_t j = 0; j < instance.supplier_models.size(); ++j) {
    validate_model(instance.supplier_models[j], instance.num_consumers, false,
                   "suppliers[" + std::to_string(j) + "]", out);
  }
  return out;
}

FractionalAssortment to_indicator(const AssortmentFamily& family,
                                  int num_suppliers) {
  FractionalAssortment x(static_cast<int>(family.menus.size()), num_suppliers);
  for (std::size_t i = 0; i < family.menus.size(); ++i) {
    for (int j : family.menus[i]) {
      if (j < 0 || j >= num_suppliers) {
        throw std::out_of_range("supplier index " + std::to_string(j) +
                                " out of range in menu " + std::to_string(i));
      }
      x.at(static_cast<int>(i), j) = 1.0;
    }
  }
  return x;
}

AssortmentFamily threshold_family(const FractionalAssortment& x,
                                  double threshold) {
  AssortmentFamily family;
  family.menus.resize(x.rows);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) {
      if (x.at(i, j) > threshold) family.menus[i].push_back(j);
    }
  }
  return family;
}

bool family_feasible(const Instance& instance, const AssortmentFamily& family) {
  if (static_cast<int>(family.menus.size()) != instance.num_consumers) {
    return false;
  }
  for (std::size_t i = 0; i < family.menus.size(); ++i) {
    const auto& menu = family.menus[i];
    for (std::size_t k = 0; k < menu.size(); ++k) {
      if (menu[k] < 0 || menu[k] >= instance.num_suppliers) return false;
      if (k > 0 && menu[k] <= menu[k - 1]) return false;
    }
    if (instance.budgets &&
        static_cast<int>(menu.size()) > (*instance.budgets)[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace menumatch
