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

#ifndef MENUMATCH_WELFARE_HPP_
#define MENUMATCH_WELFARE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "menumatch/instance.hpp"

namespace menumatch {

// Set function over 0-based item indices; callers pass sorted lists.
using SetFunction = std::function<double(const std::vector<int>&)>;

// Allocation problem: assign each item to at most one player, maximizing the
// sum of player utilities. Utilities are assumed monotone with f(empty) = 0.
struct WelfareInstance {
  int num_items = 0;
  std::vector<SetFunction> players;
};

// assignment[item] is a player index, or -1 when the item stays unassigned.
struct Partition {
  std::vector<int> assignment;
};

double partition_value(const WelfareInstance& welfare, const Partition& p);

struct ContinuousGreedyConfig {
  double delta = 0.01;        // step size; 1/delta must be integral
  int gradient_samples = 64;  // per-coordinate samples when estimating
  int exact_threshold = 16;   // exact gradients up to this ground-set size
};

// Expected value of f over independent inclusion with probabilities y.
// The exact expansion enumerates all subsets and refuses ground sets above
// kMultilinearExactLimit; the sampled form averages f over `samples` draws.
inline constexpr int kMultilinearExactLimit = 20;
double multilinear_exact(const SetFunction& f, std::span<const double> y);
double multilinear_sampled(const SetFunction& f, std::span<const double> y,
                           int samples, std::uint64_t seed);

// Accelerated greedy (stale-marginal priority queue, equivalent to the naive
// greedy for diminishing-returns utilities): repeatedly assign the
// (item, player) pair of largest positive marginal gain. Ties break toward
// the lowest item index, then the lowest player index.
Partition greedy_partition(const WelfareInstance& welfare);

// Discretized continuous greedy over the one-copy-per-item polytope, followed
// by per-item categorical rounding of the fractional assignment.
Partition continuous_greedy_partition(const WelfareInstance& welfare,
                                      const ContinuousGreedyConfig& config,
                                      std::uint64_t seed);

// The player utilities of the instance: revenue times supplier demand.
WelfareInstance make_welfare_instance(const Instance& instance);

enum class WelfareSolver { kGreedy, kContinuousGreedy };

// Assortments for easy-to-match consumers: solve the welfare allocation over
// consumers, then show each consumer exactly the supplier it was assigned to
// (menus of size at most one, feasible under any budgets).
AssortmentFamily welfare_assortment(const Instance& instance,
                                    WelfareSolver solver,
                                    const ContinuousGreedyConfig& config,
                                    std::uint64_t seed);

}  // namespace menumatch

#endif  // MENUMATCH_WELFARE_HPP_
