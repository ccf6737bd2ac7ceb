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

#include "menumatch/evaluate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "menumatch/rng.hpp"

namespace menumatch {
namespace {

// Request probabilities toward one supplier: consumers shown j and their
// pick probabilities p_ij(S_i).
struct SupplierSupport {
  std::vector<int> consumers;
  std::vector<double> probs;
};

std::vector<SupplierSupport> collect_supports(const Instance& instance,
                                              const AssortmentFamily& family) {
  std::vector<SupplierSupport> supports(instance.num_suppliers);
  for (int i = 0; i < static_cast<int>(family.menus.size()); ++i) {
    const auto& menu = family.menus[i];
    for (int j : menu) {
      const double p = choice_prob(instance.consumer_models[i], j, menu);
      supports[j].consumers.push_back(i);
      supports[j].probs.push_back(p);
    }
  }
  return supports;
}

// Distribution of the number of requesters, by dynamic programming over
// independent non-identical Bernoulli draws.
std::vector<double> requester_count_distribution(std::span<const double> probs) {
  std::vector<double> dist(probs.size() + 1, 0.0);
  dist[0] = 1.0;
  for (std::size_t t = 0; t < probs.size(); ++t) {
    const double p = probs[t];
    for (std::size_t k = t + 1; k > 0; --k) {
      dist[k] = dist[k] * (1.0 - p) + dist[k - 1] * p;
    }
    dist[0] *= (1.0 - p);
  }
  return dist;
}

double expected_demand_by_count(const ChoiceModel& model,
                                const SupplierSupport& support) {
  const auto dist = requester_count_distribution(support.probs);
  double total = 0.0;
  for (std::size_t k = 1; k < dist.size(); ++k) {
    total += dist[k] * demand_of_size(model, static_cast<int>(k));
  }
  return total;
}

double expected_demand_by_enumeration(const ChoiceModel& model,
                                      const SupplierSupport& support) {
  const int s = static_cast<int>(support.consumers.size());
  double total = 0.0;
  std::vector<int> requesters;
  requesters.reserve(s);
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    double weight = 1.0;
    requesters.clear();
    for (int t = 0; t < s; ++t) {
      if ((mask >> t) & 1u) {
        weight *= support.probs[t];
        requesters.push_back(support.consumers[t]);
      } else {
        weight *= 1.0 - support.probs[t];
      }
    }
    if (weight > 0.0 && !requesters.empty()) {
      total += weight * demand(model, requesters);
    }
  }
  return total;
}

constexpr int kPartitionDpMaxConsumers = 12;
constexpr int kPartitionDpMaxSuppliers = 6;

}  // namespace

bool exact_evaluation_available(const Instance& instance,
                                const AssortmentFamily& family) {
  const auto supports = collect_supports(instance, family);
  for (int j = 0; j < instance.num_suppliers; ++j) {
    if (demand_depends_on_size_only(instance.supplier_models[j])) continue;
    if (static_cast<int>(supports[j].consumers.size()) >
        kExactEnumerationSupport) {
      return false;
    }
  }
  return true;
}

EvalResult expected_revenue_exact(const Instance& instance,
                                  const AssortmentFamily& family) {
  const auto supports = collect_supports(instance, family);
  EvalResult result;
  result.per_supplier.resize(instance.num_suppliers, 0.0);
  for (int j = 0; j < instance.num_suppliers; ++j) {
    const auto& model = instance.supplier_models[j];
    double expectation = 0.0;
    if (demand_depends_on_size_only(model)) {
      expectation = expected_demand_by_count(model, supports[j]);
    } else if (static_cast<int>(supports[j].consumers.size()) <=
               kExactEnumerationSupport) {
      expectation = expected_demand_by_enumeration(model, supports[j]);
    } else {
      throw std::runtime_error("exact infeasible");
    }
    result.per_supplier[j] = instance.revenues[j] * expectation;
    result.value += result.per_supplier[j];
  }
  return result;
}

EvalResult simulate(const Instance& instance, const AssortmentFamily& family,
                    int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;

  // Pick probabilities are menu-fixed, compute them once.
  std::vector<std::vector<double>> pick_probs(n);
  for (int i = 0; i < n; ++i) {
    const auto& menu = family.menus[i];
    pick_probs[i].reserve(menu.size());
    for (int j : menu) {
      pick_probs[i].push_back(choice_prob(instance.consumer_models[i], j, menu));
    }
  }

  double sum = 0.0, sum_sq = 0.0;
  std::vector<double> supplier_sum(m, 0.0);
  std::vector<std::vector<int>> requesters(m);
  std::vector<double> supplier_probs;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    for (auto& r : requesters) r.clear();
    for (int i = 0; i < n; ++i) {
      const int k = rng.categorical_or_none(pick_probs[i]);
      if (k >= 0) requesters[family.menus[i][k]].push_back(i);
    }
    double revenue = 0.0;
    for (int j = 0; j < m; ++j) {
      if (requesters[j].empty()) continue;
      supplier_probs.clear();
      for (int i : requesters[j]) {
        supplier_probs.push_back(
            choice_prob(instance.supplier_models[j], i, requesters[j]));
      }
      if (rng.categorical_or_none(supplier_probs) >= 0) {
        revenue += instance.revenues[j];
        supplier_sum[j] += instance.revenues[j];
      }
    }
    sum += revenue;
    sum_sq += revenue * revenue;
  }

  EvalResult result;
  result.value = sum / trials;
  double variance = 0.0;
  if (trials > 1) {
    variance = std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1));
  }
  result.std_err = std::sqrt(variance / trials);
  result.per_supplier.resize(m);
  for (int j = 0; j < m; ++j) result.per_supplier[j] = supplier_sum[j] / trials;
  return result;
}

std::vector<double> expected_hits(const Instance& instance,
                                  const AssortmentFamily& family) {
  std::vector<double> hits(instance.num_suppliers, 0.0);
  for (int i = 0; i < static_cast<int>(family.menus.size()); ++i) {
    const auto& menu = family.menus[i];
    for (int j : menu) {
      hits[j] += choice_prob(instance.consumer_models[i], j, menu);
    }
  }
  return hits;
}

SandwichBound sandwich_bounds(const Instance& instance,
                              const AssortmentFamily& family) {
  const auto hits = expected_hits(instance, family);
  SandwichBound bound;
  for (int j = 0; j < instance.num_suppliers; ++j) {
    bound.upper += instance.revenues[j] * std::min(1.0, hits[j]);
  }
  double q_min = 1.0;
  for (int j = 0; j < instance.num_suppliers; ++j) {
    for (int i = 0; i < instance.num_consumers; ++i) {
      const int singleton[1] = {i};
      q_min = std::min(q_min, demand(instance.supplier_models[j], singleton));
    }
  }
  bound.min_singleton_demand = q_min;
  bound.lower = (1.0 - std::exp(-1.0)) * q_min * bound.upper;
  return bound;
}

BiconjugatePair biconjugate_bounds(std::span<const double> x) {
  BiconjugatePair pair;
  double survive = 1.0, total = 0.0;
  for (double v : x) {
    survive *= (1.0 - v);
    total += v;
  }
  pair.product_form = 1.0 - survive;
  pair.capped_sum = std::min(1.0, total);
  return pair;
}

namespace {

// Lexicographic order of one indicator row with bit j read before bit j+1.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const int k = std::countr_zero(a ^ b);
  return ((a >> k) & 1u) == 0;
}

bool family_lex_less(std::span<const std::uint32_t> a,
                     std::span<const std::uint32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return mask_lex_less(a[i], b[i]);
  }
  return false;
}

AssortmentFamily masks_to_family(std::span<const std::uint32_t> masks, int m) {
  AssortmentFamily family;
  family.menus.resize(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (int j = 0; j < m; ++j) {
      if ((masks[i] >> j) & 1u) family.menus[i].push_back(j);
    }
  }
  return family;
}

}  // namespace

BruteForceResult brute_force_opt(const Instance& instance, std::uint64_t cap) {
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;
  if (m > 20) throw std::invalid_argument("brute force limited to m <= 20");

  // Count feasible menus per consumer before materializing anything.
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    const int limit = instance.budgets ? (*instance.budgets)[i] : m;
    std::uint64_t count = 0;
    if (limit >= m) {
      count = std::uint64_t{1} << m;
    } else {
      std::uint64_t binom = 1;  // C(m, k)
      count = 1;
      for (int k = 1; k <= limit; ++k) {
        binom = binom * static_cast<std::uint64_t>(m - k + 1) /
                static_cast<std::uint64_t>(k);
        count += binom;
      }
    }
    if (total > cap / count) throw std::runtime_error("brute force cap exceeded");
    total *= count;
  }

  // Feasible menus per consumer, as bitmasks in numeric order.
  std::vector<std::vector<std::uint32_t>> candidates(n);
  for (int i = 0; i < n; ++i) {
    const int limit = instance.budgets ? (*instance.budgets)[i] : m;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (std::popcount(mask) <= limit) candidates[i].push_back(mask);
    }
  }

  BruteForceResult best;
  best.opt_value = -std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> best_masks;
  std::vector<std::size_t> odometer(n, 0);
  std::vector<std::uint32_t> masks(n, 0);
  constexpr double kTieTol = 1e-12;
  while (true) {
    for (int i = 0; i < n; ++i) masks[i] = candidates[i][odometer[i]];
    const auto family = masks_to_family(masks, m);
    const double value = expected_revenue_exact(instance, family).value;
    ++best.families_enumerated;
    if (value > best.opt_value + kTieTol) {
      best.opt_value = value;
      best_masks = masks;
    } else if (value >= best.opt_value - kTieTol &&
               family_lex_less(masks, best_masks)) {
      best.opt_value = std::max(best.opt_value, value);
      best_masks = masks;
    }
    int pos = n - 1;
    while (pos >= 0 && ++odometer[pos] == candidates[pos].size()) {
      odometer[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  best.opt_family = masks_to_family(best_masks, m);
  return best;
}

namespace {

double welfare_bound_by_allocation(const Instance& instance) {
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;
  std::vector<int> counts(m, 0);
  double value = 0.0;
  for (int step = 0; step < n; ++step) {
    int best_j = 0;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) {
      const auto& model = instance.supplier_models[j];
      const double gain =
          instance.revenues[j] *
          (demand_of_size(model, counts[j] + 1) - demand_of_size(model, counts[j]));
      if (gain > best_gain) {
        best_gain = gain;
        best_j = j;
      }
    }
    counts[best_j] += 1;
    value += best_gain;
  }
  return value;
}

double welfare_bound_by_partition_dp(const Instance& instance) {
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);

  // Demand tables per supplier over consumer subsets.
  std::vector<std::vector<double>> gain(m);
  for (int j = 0; j < m; ++j) {
    gain[j].resize(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      gain[j][mask] =
          instance.revenues[j] * demand_mask(instance.supplier_models[j], mask);
    }
  }

  const double neg_inf = -std::numeric_limits<double>::infinity();
  // prev[T]: best value of covering exactly T with the first j suppliers.
  std::vector<double> prev(std::size_t{1} << n, neg_inf);
  prev[0] = 0.0;
  std::vector<double> cur(std::size_t{1} << n);
  for (int j = 0; j < m; ++j) {
    for (std::uint32_t t = 0; t <= full; ++t) {
      double best = neg_inf;
      std::uint32_t a = t;
      while (true) {  // all submasks of t, including empty and t itself
        if (prev[t ^ a] > neg_inf) best = std::max(best, gain[j][a] + prev[t ^ a]);
        if (a == 0) break;
        a = (a - 1) & t;
      }
      cur[t] = best;
    }
    std::swap(prev, cur);
  }
  return prev[full];
}

}  // namespace

double welfare_upper_bound(const Instance& instance) {
  if (instance.num_consumers <= 0) return 0.0;
  const bool all_size_based = std::all_of(
      instance.supplier_models.begin(), instance.supplier_models.end(),
      [](const ChoiceModel& model) { return demand_depends_on_size_only(model); });
  if (all_size_based) return welfare_bound_by_allocation(instance);
  if (instance.num_consumers <= kPartitionDpMaxConsumers &&
      instance.num_suppliers <= kPartitionDpMaxSuppliers) {
    return welfare_bound_by_partition_dp(instance);
  }
  throw std::runtime_error("no exact path");
}

}  // namespace menumatch
