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

#ifndef MENUMATCH_EVALUATE_HPP_
#define MENUMATCH_EVALUATE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "menumatch/instance.hpp"

namespace menumatch {

// Exact expected revenue: sum over suppliers of r_j * E[demand_j(requesters)],
// where each consumer shown j requests it independently with its pick
// probability. Uses a counting distribution (O(n^2) per supplier) when the
// supplier demand depends on the requester count only, subset enumeration
// when at most kExactEnumerationSupport consumers can request, and throws
// std::runtime_error("exact infeasible") otherwise.
inline constexpr int kExactEnumerationSupport = 20;
EvalResult expected_revenue_exact(const Instance& instance,
                                  const AssortmentFamily& family);
bool exact_evaluation_available(const Instance& instance,
                                const AssortmentFamily& family);

// Plain Monte Carlo over the full two-stage process. Each trial draws its
// RNG stream from (seed, trial), so results do not depend on scheduling.
EvalResult simulate(const Instance& instance, const AssortmentFamily& family,
                    int trials, std::uint64_t seed);

// Expected number of consumers that request each supplier.
std::vector<double> expected_hits(const Instance& instance,
                                  const AssortmentFamily& family);

// Capped-hits bounds: upper = sum_j r_j * min(1, hits_j) and
// lower = (1 - 1/e) * min_singleton_demand * upper, which bracket the exact
// expected revenue for regular models.
struct SandwichBound {
  double lower = 0.0;
  double upper = 0.0;
  double min_singleton_demand = 0.0;  // min over suppliers j, consumers i of Q_j({i})
};
SandwichBound sandwich_bounds(const Instance& instance,
                              const AssortmentFamily& family);

// For x in [0,1]^k: product_form = 1 - prod(1 - x_i) and
// capped_sum = min(1, sum x_i); (1 - 1/e) * capped_sum <= product_form
// <= capped_sum.
struct BiconjugatePair {
  double product_form = 0.0;
  double capped_sum = 0.0;
};
BiconjugatePair biconjugate_bounds(std::span<const double> x);

// Exhaustive optimum over every feasible family, ties broken by the
// lexicographically smallest indicator matrix. Throws when the number of
// feasible families exceeds cap.
struct BruteForceResult {
  double opt_value = 0.0;
  AssortmentFamily opt_family;
  std::uint64_t families_enumerated = 0;
};
BruteForceResult brute_force_opt(const Instance& instance, std::uint64_t cap);

// Optimal value of the consumer-partition welfare problem
// max sum_j r_j * demand_j(A_j) over partitions of the consumers. Solved
// exactly by greedy marginal allocation when all suppliers are size-based
// (each term is concave in the block size), by subset DP when n <= 12 and
// m <= 6, and throws std::runtime_error("no exact path") otherwise.
double welfare_upper_bound(const Instance& instance);

}  // namespace menumatch

#endif  // MENUMATCH_EVALUATE_HPP_
