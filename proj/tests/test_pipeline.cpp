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

#include "menumatch/mnl_lp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <stdexcept>

#include "doctest.h"
#include "menumatch/evaluate.hpp"
#include "menumatch/rng.hpp"
#include "menumatch/rounding.hpp"
#include "menumatch/welfare.hpp"
#include "test_util.hpp"

namespace menumatch {
namespace {

using testutil::mnl;
using testutil::mnl_uniform_instance;

TEST_CASE("fractional recovery from the solved LP") {
  const Instance instance = mnl_uniform_instance(1, 1, 0.5, 1.0);
  const auto solution = solve_lp(build_assortment_lp(instance));
  REQUIRE(solution.status == LpStatus::kOptimal);
  const auto x = recover_fractional(solution, instance);
  // y* = w* at the optimum, so the recovered entry sits at 1.
  CHECK(x.at(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lp rounding always shows the single valuable supplier") {
  const Instance instance = mnl_uniform_instance(1, 1, 0.5, 1.0);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto family = lp_rounding_assortment(instance, seed);
    CHECK(family.menus == std::vector<std::vector<int>>{{0}});
  }
}

TEST_CASE("zero revenues give empty menus through the sparse LP solution") {
  Instance instance = mnl_uniform_instance(2, 2, 0.5, 1.0);
  instance.revenues = {0.0, 0.0};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto family = lp_rounding_assortment(instance, seed);
    CHECK(family.menus == std::vector<std::vector<int>>{{}, {}});
  }
}

TEST_CASE("budgeted rounding keeps every menu within budget") {
  Rng rng(67);
  for (int round = 0; round < 5; ++round) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const int m = 2 + static_cast<int>(rng.below(2));
    Instance instance =
        testutil::random_mnl_uniform(rng, n, m, 0.1, 0.9, 0.0, 1.0);
    std::vector<int> budgets(n);
    for (int i = 0; i < n; ++i) budgets[i] = 1 + static_cast<int>(rng.below(2));
    instance.budgets = budgets;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      const auto family = lp_rounding_assortment_budgeted(instance, seed);
      for (int i = 0; i < n; ++i) {
        CHECK(static_cast<int>(family.menus[i].size()) <= budgets[i]);
      }
    }
  }
}

TEST_CASE("unit budget menus draw single suppliers with the LP marginals") {
  Instance instance = mnl_uniform_instance(1, 3, 0.5, 1.0);
  instance.budgets = std::vector<int>{1};
  const auto x = lp_fractional_solution(instance, true);
  double row_sum = 0.0;
  for (int j = 0; j < 3; ++j) row_sum += x.at(0, j);
  CHECK(row_sum <= 1.0 + 1e-9);

  const int trials = 40000;
  std::vector<int> picks(3, 0);
  for (int t = 0; t < trials; ++t) {
    const auto family = round_dependent_rows(x, t);
    REQUIRE(family.menus[0].size() <= 1);
    if (!family.menus[0].empty()) picks[family.menus[0][0]] += 1;
  }
  for (int j = 0; j < 3; ++j) {
    const double freq = static_cast<double>(picks[j]) / trials;
    const double sigma =
        std::sqrt(x.at(0, j) * (1.0 - x.at(0, j)) / trials) + 1e-12;
    CHECK(std::abs(freq - x.at(0, j)) <= 4.0 * sigma);
  }
}

// Rounded solutions keep at least half of each LP mass coordinate in
// expectation, for both rounding schemes.
TEST_CASE("rounded mass dominates half the LP mass") {
  Rng rng(71);
  for (int round = 0; round < 3; ++round) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const int m = 2 + static_cast<int>(rng.below(2));
    Instance instance =
        testutil::random_mnl_uniform(rng, n, m, 0.05, 0.95, 0.0, 1.0);
    std::vector<std::vector<double>> scores(n);
    for (int i = 0; i < n; ++i) {
      const auto& model = std::get<MnlModel>(instance.consumer_models[i]);
      scores[i] = model.weights;
    }

    for (bool budgeted : {false, true}) {
      if (budgeted) {
        instance.budgets =
            std::vector<int>(n, 1 + static_cast<int>(rng.below(m)));
      }
      const auto lp = budgeted ? build_assortment_lp_budgeted(instance)
                               : build_assortment_lp(instance);
      const auto solution = solve_lp(lp);
      REQUIRE(solution.status == LpStatus::kOptimal);
      const auto x = lp_fractional_solution(instance, budgeted);

      const int trials = 20000;
      std::vector<double> mass_sum(static_cast<std::size_t>(n) * m, 0.0);
      std::vector<double> mass_sq(static_cast<std::size_t>(n) * m, 0.0);
      for (int t = 0; t < trials; ++t) {
        const auto family =
            budgeted ? round_dependent_rows(x, derive_seed(round, t))
                     : round_independent(x, derive_seed(round, t));
        for (int i = 0; i < n; ++i) {
          double denom = 1.0;
          for (int j : family.menus[i]) denom += scores[i][j];
          for (int j : family.menus[i]) {
            const std::size_t idx = static_cast<std::size_t>(i) * m + j;
            const double value = 1.0 / denom;
            mass_sum[idx] += value;
            mass_sq[idx] += value * value;
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
          const std::size_t idx = static_cast<std::size_t>(i) * m + j;
          const double target =
              solution.x[lp_var_y(instance, i, j)] / 2.0;
          const double mean = mass_sum[idx] / trials;
          const double var =
              std::max(0.0, mass_sq[idx] / trials - mean * mean);
          const double stderr_mean = std::sqrt(var / trials) + 1e-12;
          CHECK(mean >= target - 4.0 * stderr_mean);
        }
      }
    }
  }
}

TEST_CASE("split combiner reduces to its branches on one-sided instances") {
  // All scores >= 1: identical to the greedy welfare assortment.
  const Instance high = mnl_uniform_instance(3, 2, 2.0, 1.0);
  const ContinuousGreedyConfig cg;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(split_by_score_assortment(high, seed).menus ==
          welfare_assortment(high, WelfareSolver::kGreedy, cg, seed).menus);
  }
  // All scores < 1: identical to the LP rounding with the same seed.
  const Instance low = mnl_uniform_instance(3, 2, 0.5, 1.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(split_by_score_assortment(low, seed).menus ==
          lp_rounding_assortment(low, seed).menus);
  }
}

TEST_CASE("split combiner returns the better completed branch") {
  // Two high-score suppliers, two low-score ones, shared across consumers.
  Instance instance;
  instance.num_consumers = 4;
  instance.num_suppliers = 4;
  instance.revenues.assign(4, 1.0);
  const std::vector<double> scores = {1.5, 0.4, 2.0, 0.7};
  for (int i = 0; i < 4; ++i) {
    instance.consumer_models.push_back(mnl(scores));
  }
  for (int j = 0; j < 4; ++j) {
    instance.supplier_models.push_back(UniformModel{0.8});
  }

  const std::uint64_t seed = 3;
  const auto chosen = split_by_score_assortment(instance, seed);

  // Rebuild both candidates through the same public pipelines.
  auto make_subset = [&](const std::vector<int>& keep) {
    Instance sub;
    sub.num_consumers = 4;
    sub.num_suppliers = static_cast<int>(keep.size());
    for (int j : keep) {
      sub.supplier_models.push_back(instance.supplier_models[j]);
      sub.revenues.push_back(1.0);
    }
    for (int i = 0; i < 4; ++i) {
      std::vector<double> weights;
      for (int j : keep) weights.push_back(scores[j]);
      sub.consumer_models.push_back(mnl(std::move(weights)));
    }
    return sub;
  };
  const std::vector<int> high = {0, 2}, low = {1, 3};
  const ContinuousGreedyConfig cg;
  const auto high_sub =
      welfare_assortment(make_subset(high), WelfareSolver::kGreedy, cg, seed);
  const auto low_sub = lp_rounding_assortment(make_subset(low), seed);
  auto lift = [&](const AssortmentFamily& sub, const std::vector<int>& keep) {
    AssortmentFamily out;
    out.menus.resize(4);
    for (int i = 0; i < 4; ++i) {
      for (int local : sub.menus[i]) out.menus[i].push_back(keep[local]);
      std::sort(out.menus[i].begin(), out.menus[i].end());
    }
    return out;
  };
  const auto high_family = lift(high_sub, high);
  const auto low_family = lift(low_sub, low);
  const double high_value = expected_revenue_exact(instance, high_family).value;
  const double low_value = expected_revenue_exact(instance, low_family).value;
  const double chosen_value = expected_revenue_exact(instance, chosen).value;
  CHECK(chosen_value == doctest::Approx(std::max(high_value, low_value)));
  CHECK((chosen.menus == high_family.menus || chosen.menus == low_family.menus));
}

TEST_CASE("split combiner rejects heterogeneous consumer scores") {
  Instance instance = mnl_uniform_instance(2, 2, 0.5, 1.0);
  instance.consumer_models[1] = mnl({0.5, 0.9});
  CHECK_THROWS_AS(split_by_score_assortment(instance, 0),
                  std::invalid_argument);
}

}  // namespace
}  // namespace menumatch
