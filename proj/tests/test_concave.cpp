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

#include "menumatch/concave.hpp"

#include <cmath>
#include <vector>

#include <stdexcept>

#include "doctest.h"
#include "menumatch/baselines.hpp"
#include "menumatch/evaluate.hpp"
#include "menumatch/rng.hpp"
#include "test_util.hpp"

namespace menumatch {
namespace {

using testutil::mnl;
using testutil::mnl_uniform_instance;
using testutil::uniform;

TEST_CASE("supplier-side upper bound on small instances") {
  const Instance two = mnl_uniform_instance(2, 1, 1.0, 1.0);
  AssortmentFamily empty;
  empty.menus = {{}, {}};
  CHECK(mnl_supplier_upper_bound(two, empty) == doctest::Approx(0.0));

  AssortmentFamily both;
  both.menus = {{0}, {0}};
  // Mass 1.0 against outside weight 1: bound 1/2 above the exact 5/12.
  CHECK(mnl_supplier_upper_bound(two, both) == doctest::Approx(0.5));
  CHECK(mnl_supplier_upper_bound(two, both) >=
        expected_revenue_exact(two, both).value);

  const Instance one = mnl_uniform_instance(1, 1, 1.0, 1.0);
  AssortmentFamily single;
  single.menus = {{0}};
  CHECK(mnl_supplier_upper_bound(one, single) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("supplier-side bound dominates the exact value") {
  Rng rng(73);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const int m = 1 + static_cast<int>(rng.below(3));
    Instance instance =
        testutil::random_mnl_uniform(rng, n, m, 0.2, 2.5, 0.1, 1.5);
    if (rng.bernoulli(0.5)) {
      // MNL suppliers with heterogeneous scores
      for (int j = 0; j < m; ++j) {
        std::vector<double> weights(n);
        for (double& w : weights) w = rng.uniform(0.1, 1.5);
        instance.supplier_models[j] = mnl(weights, rng.uniform(0.1, 1.0));
      }
    }
    const auto family = testutil::random_family(rng, n, m);
    CHECK(mnl_supplier_upper_bound(instance, family) >=
          expected_revenue_exact(instance, family).value - 1e-9);
  }
}

TEST_CASE("uniform suppliers collapse the bound to a hits expression") {
  Rng rng(79);
  const Instance instance =
      testutil::random_mnl_uniform(rng, 4, 3, 0.2, 1.5, 0.2, 1.2);
  const auto family = testutil::random_family(rng, 4, 3);
  const auto hits = expected_hits(instance, family);
  double expected = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double outside =
        std::get<UniformModel>(instance.supplier_models[j]).outside_weight;
    if (hits[j] > 0.0) expected += hits[j] / (outside + hits[j]);
  }
  CHECK(mnl_supplier_upper_bound(instance, family) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("supplier-side bound requires MNL-like suppliers") {
  Instance instance = mnl_uniform_instance(2, 1, 1.0, 1.0);
  instance.supplier_models[0] = PopularModel{0, 2};
  AssortmentFamily family;
  family.menus = {{0}, {}};
  CHECK_THROWS_AS(mnl_supplier_upper_bound(instance, family),
                  std::invalid_argument);
}

TEST_CASE("frank-wolfe solves the one-pair relaxation") {
  const Instance instance = mnl_uniform_instance(1, 1, 0.5, 1.0);
  const auto program = make_concave_program(instance, false);
  FrankWolfeConfig config;
  config.max_iters = 5000;
  config.tol = 1e-9;
  const auto result = maximize_concave(program, config);
  CHECK(result.value == doctest::Approx(0.25).epsilon(1e-5));
  CHECK(result.value + result.gap >= 0.25 - 1e-9);
  CHECK(result.gap >= 0.0);
}

TEST_CASE("frank-wolfe on zero revenues stays at zero") {
  Instance instance = mnl_uniform_instance(2, 2, 0.5, 1.0);
  instance.revenues = {0.0, 0.0};
  const auto result =
      maximize_concave(make_concave_program(instance, false), FrankWolfeConfig{});
  CHECK(result.value == doctest::Approx(0.0));
}

TEST_CASE("relaxation value plus gap dominates the optimum") {
  Rng rng(83);
  for (int round = 0; round < 8; ++round) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const Instance instance =
        testutil::random_mnl_uniform(rng, n, m, 0.2, 2.0, 0.1, 1.5);
    const auto result = maximize_concave(make_concave_program(instance, false),
                                         FrankWolfeConfig{});
    const double opt = brute_force_opt(instance, 1u << 20).opt_value;
    CHECK(result.value + result.gap >= opt - 1e-6);
  }
}

TEST_CASE("budgeted relaxation with slack budgets matches the unconstrained one") {
  Instance instance = mnl_uniform_instance(2, 3, 0.5, 1.0);
  instance.budgets = std::vector<int>{3, 3};
  const auto free_result = maximize_concave(
      make_concave_program(instance, false), FrankWolfeConfig{});
  const auto capped_result = maximize_concave(
      make_concave_program(instance, true), FrankWolfeConfig{});
  CHECK(free_result.value ==
        doctest::Approx(capped_result.value).epsilon(1e-4));
}

TEST_CASE("concave programs reject suppliers without an outside option") {
  Instance instance = mnl_uniform_instance(1, 1, 0.5, 0.0);
  CHECK_THROWS_AS(make_concave_program(instance, false), std::invalid_argument);
}

TEST_CASE("concave rounding on the one-pair instance always shows the supplier") {
  const Instance instance = mnl_uniform_instance(1, 1, 0.5, 1.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(concave_rounding_assortment(instance, FrankWolfeConfig{}, seed)
              .menus == std::vector<std::vector<int>>{{0}});
  }
  Instance zero = instance;
  zero.revenues = {0.0};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(concave_rounding_assortment(zero, FrankWolfeConfig{}, seed)
              .menus == std::vector<std::vector<int>>{{}});
  }
}

TEST_CASE("budgeted concave rounding respects budgets always") {
  Rng rng(89);
  Instance instance =
      testutil::random_mnl_uniform(rng, 3, 3, 0.2, 1.5, 0.1, 1.0);
  instance.budgets = std::vector<int>{1, 2, 1};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto family =
        concave_rounding_assortment_budgeted(instance, FrankWolfeConfig{}, seed);
    for (int i = 0; i < 3; ++i) {
      CHECK(static_cast<int>(family.menus[i].size()) <=
            (*instance.budgets)[i]);
    }
  }
}

TEST_CASE("concave rounding mean stays below the certified relaxation value") {
  Rng rng(97);
  const Instance instance =
      testutil::random_mnl_uniform(rng, 4, 3, 0.2, 1.2, 0.2, 1.2);
  FrankWolfeConfig config;
  config.max_iters = 4000;
  config.tol = 1e-7;
  const auto relaxed = maximize_concave(make_concave_program(instance, false),
                                        config);
  const int seeds = 100;
  std::vector<double> values(seeds);
  double sum = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const auto family = concave_rounding_assortment(instance, config, s);
    values[s] = expected_revenue_exact(instance, family).value;
    sum += values[s];
  }
  const double mean = sum / seeds;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double stderr_mean = std::sqrt(ss / (seeds - 1) / seeds);
  CHECK(mean <= relaxed.value + relaxed.gap + 2.0 * stderr_mean + 1e-9);
}

TEST_CASE("concave rounding tends to beat the full assortment") {
  Rng rng(101);
  int wins = 0;
  const int rounds = 10;
  for (int round = 0; round < rounds; ++round) {
    const Instance instance =
        testutil::random_mnl_uniform(rng, 4, 3, 0.2, 0.9, 0.1, 1.0);
    const auto full = baseline_assortment(BaselineKind::kFullMenu, instance,
                                          nullptr, round);
    const double full_value = expected_revenue_exact(instance, full).value;
    double mean = 0.0;
    const int seeds = 40;
    for (int s = 0; s < seeds; ++s) {
      const auto family = concave_rounding_assortment(
          instance, FrankWolfeConfig{}, derive_seed(round, s));
      mean += expected_revenue_exact(instance, family).value;
    }
    mean /= seeds;
    wins += mean >= full_value;
  }
  CHECK(wins * 2 >= rounds);
}

}  // namespace
}  // namespace menumatch
