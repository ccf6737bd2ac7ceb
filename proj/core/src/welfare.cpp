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

#include "menumatch/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <stdexcept>
#include <string>

#include "menumatch/rng.hpp"

namespace menumatch {
namespace {

constexpr std::uint64_t kGradientTag = 0x67726164;  // stream tags
constexpr std::uint64_t kRoundTag = 0x726f756e;

std::vector<int> sorted_insert(std::vector<int> base, int item) {
  base.insert(std::upper_bound(base.begin(), base.end(), item), item);
  return base;
}

}  // namespace

double partition_value(const WelfareInstance& welfare, const Partition& p) {
  const int players = static_cast<int>(welfare.players.size());
  std::vector<std::vector<int>> blocks(players);
  for (int i = 0; i < static_cast<int>(p.assignment.size()); ++i) {
    const int j = p.assignment[i];
    if (j >= 0) blocks[j].push_back(i);
  }
  double total = 0.0;
  for (int j = 0; j < players; ++j) total += welfare.players[j](blocks[j]);
  return total;
}

double multilinear_exact(const SetFunction& f, std::span<const double> y) {
  const int ground = static_cast<int>(y.size());
  if (ground > kMultilinearExactLimit) {
    throw std::invalid_argument("exact multilinear limited to ground sets <= " +
                                std::to_string(kMultilinearExactLimit));
  }
  double total = 0.0;
  std::vector<int> subset;
  subset.reserve(ground);
  for (std::uint32_t mask = 0; mask < (1u << ground); ++mask) {
    double weight = 1.0;
    subset.clear();
    for (int e = 0; e < ground; ++e) {
      if ((mask >> e) & 1u) {
        weight *= y[e];
        subset.push_back(e);
      } else {
        weight *= 1.0 - y[e];
      }
    }
    if (weight > 0.0) total += weight * f(subset);
  }
  return total;
}

double multilinear_sampled(const SetFunction& f, std::span<const double> y,
                           int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const int ground = static_cast<int>(y.size());
  double total = 0.0;
  std::vector<int> subset;
  subset.reserve(ground);
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    subset.clear();
    for (int e = 0; e < ground; ++e) {
      if (rng.bernoulli(y[e])) subset.push_back(e);
    }
    total += f(subset);
  }
  return total / samples;
}

Partition greedy_partition(const WelfareInstance& welfare) {
  const int items = welfare.num_items;
  const int players = static_cast<int>(welfare.players.size());
  Partition result;
  result.assignment.assign(items, -1);
  if (items == 0 || players == 0) return result;

  struct Candidate {
    double gain;
    int item;
    int player;
    int version;  // player version the gain was computed against
  };
  // Max-heap on (gain, then lowest item, then lowest player).
  auto worse = [](const Candidate& a, const Candidate& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    if (a.item != b.item) return a.item > b.item;
    return a.player > b.player;
  };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(worse)> queue(
      worse);

  std::vector<std::vector<int>> blocks(players);
  std::vector<double> base(players);
  std::vector<int> version(players, 0);
  for (int j = 0; j < players; ++j) {
    base[j] = welfare.players[j](blocks[j]);
  }
  for (int i = 0; i < items; ++i) {
    for (int j = 0; j < players; ++j) {
      const double gain = welfare.players[j]({i}) - base[j];
      if (gain > 0.0) queue.push({gain, i, j, 0});
    }
  }

  while (!queue.empty()) {
    Candidate top = queue.top();
    queue.pop();
    if (result.assignment[top.item] >= 0) continue;
    if (top.version != version[top.player]) {
      const double value =
          welfare.players[top.player](sorted_insert(blocks[top.player], top.item));
      const double gain = value - base[top.player];
      if (gain > 0.0) queue.push({gain, top.item, top.player, version[top.player]});
      continue;
    }
    result.assignment[top.item] = top.player;
    blocks[top.player] = sorted_insert(blocks[top.player], top.item);
    base[top.player] = welfare.players[top.player](blocks[top.player]);
    version[top.player] += 1;
  }
  return result;
}

namespace {

// Builds base + {item} in place, reusing with_item's capacity.
void insert_into(const std::vector<int>& base, int item,
                 std::vector<int>& with_item) {
  with_item.assign(base.begin(), base.end());
  with_item.insert(
      std::upper_bound(with_item.begin(), with_item.end(), item), item);
}

// d F / d y_{ij}: expected marginal of adding item i to player j's block,
// with the rest of the column drawn independently from y.
double exact_gradient_coordinate(const SetFunction& f, int items, int item,
                                 std::span<const double> column) {
  double total = 0.0;
  std::vector<int> base, with_item;
  for (std::uint32_t mask = 0; mask < (1u << items); ++mask) {
    if ((mask >> item) & 1u) continue;
    double weight = 1.0;
    base.clear();
    for (int e = 0; e < items; ++e) {
      if (e == item) continue;
      if ((mask >> e) & 1u) {
        weight *= column[e];
        base.push_back(e);
      } else {
        weight *= 1.0 - column[e];
      }
    }
    if (weight <= 0.0) continue;
    insert_into(base, item, with_item);
    total += weight * (f(with_item) - f(base));
  }
  return total;
}

// One stream per coordinate batch; batches are the unit of concurrency.
double sampled_gradient_coordinate(const SetFunction& f, int items, int item,
                                   std::span<const double> column, int samples,
                                   std::uint64_t stream) {
  Rng rng(stream);
  double total = 0.0;
  std::vector<int> base, with_item;
  for (int s = 0; s < samples; ++s) {
    base.clear();
    for (int e = 0; e < items; ++e) {
      if (e == item) continue;
      if (rng.bernoulli(column[e])) base.push_back(e);
    }
    insert_into(base, item, with_item);
    total += f(with_item) - f(base);
  }
  return total / samples;
}

}  // namespace

Partition continuous_greedy_partition(const WelfareInstance& welfare,
                                      const ContinuousGreedyConfig& config,
                                      std::uint64_t seed) {
  const int items = welfare.num_items;
  const int players = static_cast<int>(welfare.players.size());
  Partition result;
  result.assignment.assign(items, -1);
  if (items == 0 || players == 0) return result;

  const int steps = static_cast<int>(std::lround(1.0 / config.delta));
  if (steps < 1 || std::abs(steps * config.delta - 1.0) > 1e-9) {
    throw std::invalid_argument("1/delta must be a positive integer");
  }
  const bool exact =
      static_cast<long long>(items) * players <= config.exact_threshold;
  if (!exact && config.gradient_samples < 1) {
    throw std::invalid_argument("gradient_samples must be >= 1");
  }

  // y is item-major; column j of y is player j's inclusion profile.
  std::vector<std::vector<double>> columns(players,
                                           std::vector<double>(items, 0.0));
  std::vector<double> gradient(static_cast<std::size_t>(items) * players);
  for (int step = 0; step < steps; ++step) {
    for (int j = 0; j < players; ++j) {
      for (int i = 0; i < items; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i) * players + j;
        if (exact) {
          gradient[idx] = exact_gradient_coordinate(welfare.players[j], items,
                                                    i, columns[j]);
        } else {
          gradient[idx] = sampled_gradient_coordinate(
              welfare.players[j], items, i, columns[j],
              config.gradient_samples,
              derive_seed(seed, kGradientTag, static_cast<std::uint64_t>(step),
                          idx));
        }
      }
    }
    // Best direction in the polytope: at most one copy per item, so pick the
    // largest positive gradient coordinate per item.
    for (int i = 0; i < items; ++i) {
      int best_player = -1;
      double best = 0.0;
      for (int j = 0; j < players; ++j) {
        const double g = gradient[static_cast<std::size_t>(i) * players + j];
        if (g > best) {
          best = g;
          best_player = j;
        }
      }
      if (best_player >= 0) {
        columns[best_player][i] =
            std::min(1.0, columns[best_player][i] + config.delta);
      }
    }
  }

  // Independent per-item categorical rounding of the fractional assignment.
  std::vector<double> probs(players);
  for (int i = 0; i < items; ++i) {
    for (int j = 0; j < players; ++j) probs[j] = columns[j][i];
    Rng rng(derive_seed(seed, kRoundTag, static_cast<std::uint64_t>(i)));
    result.assignment[i] = rng.categorical_or_none(probs);
  }
  return result;
}

WelfareInstance make_welfare_instance(const Instance& instance) {
  WelfareInstance welfare;
  welfare.num_items = instance.num_consumers;
  welfare.players.reserve(instance.num_suppliers);
  for (int j = 0; j < instance.num_suppliers; ++j) {
    welfare.players.push_back(
        [model = instance.supplier_models[j],
         revenue = instance.revenues[j]](const std::vector<int>& block) {
          return revenue * demand(model, block);
        });
  }
  return welfare;
}

AssortmentFamily welfare_assortment(const Instance& instance,
                                    WelfareSolver solver,
                                    const ContinuousGreedyConfig& config,
                                    std::uint64_t seed) {
  // The guarantee needs submodular supplier demand; verifiable only at
  // small scale, advisory beyond that.
  if (instance.num_consumers <= 10) {
    for (int j = 0; j < instance.num_suppliers; ++j) {
      if (!is_submodular_demand(instance.supplier_models[j],
                                instance.num_consumers)) {
        std::fprintf(stderr,
                     "menumatch: warning: supplier %d demand is not "
                     "submodular; the welfare guarantee does not apply\n",
                     j + 1);
      }
    }
  }
  const WelfareInstance welfare = make_welfare_instance(instance);
  const Partition partition =
      solver == WelfareSolver::kGreedy
          ? greedy_partition(welfare)
          : continuous_greedy_partition(welfare, config, seed);
  AssortmentFamily family;
  family.menus.resize(instance.num_consumers);
  for (int i = 0; i < instance.num_consumers; ++i) {
    if (partition.assignment[i] >= 0) {
      family.menus[i].push_back(partition.assignment[i]);
    }
  }
  return family;
}

}  // namespace menumatch
