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

#include <cmath>
#include <vector>

#include <stdexcept>

#include "doctest.h"
#include "menumatch/rng.hpp"
#include "test_util.hpp"

namespace menumatch {
namespace {

using testutil::mnl;
using testutil::uniform;

std::vector<int> menu_of(std::initializer_list<int> items) { return items; }

TEST_CASE("mnl choice probabilities") {
  const ChoiceModel model = mnl({1.0});
  const auto menu = menu_of({0});
  CHECK(choice_prob(model, 0, menu) == doctest::Approx(0.5));
  CHECK(choice_prob(model, kOutsideOption, menu) == doctest::Approx(0.5));

  const ChoiceModel two = mnl({2.0, 1.0});
  const auto pair_menu = menu_of({0, 1});
  CHECK(choice_prob(two, 0, pair_menu) == doctest::Approx(0.5));
  CHECK(choice_prob(two, 1, pair_menu) == doctest::Approx(0.25));
  CHECK(choice_prob(two, kOutsideOption, pair_menu) == doctest::Approx(0.25));
}

TEST_CASE("uniform and popular choice probabilities") {
  const ChoiceModel uni = uniform(1.0);
  CHECK(choice_prob(uni, 0, menu_of({0, 1})) == doctest::Approx(1.0 / 3.0));
  CHECK(choice_prob(uni, 1, menu_of({0, 1})) == doctest::Approx(1.0 / 3.0));

  const ChoiceModel popular = PopularModel{2, 4};
  const auto with_popular = menu_of({1, 2, 3});
  CHECK(choice_prob(popular, 2, with_popular) == doctest::Approx(0.4));
  CHECK(choice_prob(popular, 1, with_popular) == doctest::Approx(0.0));
  CHECK(choice_prob(popular, kOutsideOption, with_popular) ==
        doctest::Approx(0.6));
}

TEST_CASE("choice_prob rejects options not offered") {
  const ChoiceModel model = mnl({1.0, 2.0});
  CHECK_THROWS_AS(choice_prob(model, 1, menu_of({0})), std::domain_error);
}

TEST_CASE("demand closed forms") {
  const ChoiceModel uni = uniform(1.0);
  CHECK(demand(uni, menu_of({})) == doctest::Approx(0.0));
  CHECK(demand(uni, menu_of({0, 1, 2})) == doctest::Approx(0.75));

  const ChoiceModel popular = PopularModel{2, 4};
  CHECK(demand(popular, menu_of({0, 1})) == doctest::Approx(1.0 / 3.0));
  CHECK(demand(popular, menu_of({0, 2})) == doctest::Approx(0.4));
  CHECK(demand(mnl({1.0, 1.0}), menu_of({})) == doctest::Approx(0.0));
}

TEST_CASE("uniform with zero outside weight leaves on empty menus") {
  const ChoiceModel uni = uniform(0.0);
  CHECK(choice_prob(uni, kOutsideOption, menu_of({})) == doctest::Approx(1.0));
  CHECK(demand(uni, menu_of({})) == doctest::Approx(0.0));
  CHECK(demand(uni, menu_of({0, 1})) == doctest::Approx(1.0));
}

TEST_CASE("probabilities over menu plus outside sum to one") {
  Rng rng(41);
  const int ground = 5;
  std::vector<ChoiceModel> models;
  std::vector<double> weights;
  for (int k = 0; k < ground; ++k) weights.push_back(rng.uniform(0.1, 3.0));
  models.push_back(mnl(weights, rng.uniform(0.2, 2.0)));
  models.push_back(uniform(rng.uniform(0.0, 2.0)));
  models.push_back(PopularModel{1, ground});
  models.push_back(tabulate(PopularModel{3, ground}));
  for (const auto& model : models) {
    for (std::uint32_t mask = 0; mask < (1u << ground); ++mask) {
      std::vector<int> menu;
      for (int k = 0; k < ground; ++k) {
        if ((mask >> k) & 1u) menu.push_back(k);
      }
      double total = choice_prob(model, kOutsideOption, menu);
      for (int k : menu) total += choice_prob(model, k, menu);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(demand(model, menu) ==
            doctest::Approx(1.0 - choice_prob(model, kOutsideOption, menu))
                .epsilon(1e-9));
      std::uint32_t as_mask = 0;
      for (int k : menu) as_mask |= 1u << k;
      CHECK(demand_mask(model, as_mask) ==
            doctest::Approx(demand(model, menu)).epsilon(1e-12));
    }
  }
}

TEST_CASE("regularity checker") {
  CHECK(is_regular(tabulate(mnl({0.5, 2.0, 1.0}))));
  CHECK(is_regular(tabulate(uniform(0.7), 4)));
  CHECK(is_regular(tabulate(PopularModel{1, 3})));
  CHECK(is_regular(tabulate(mnl({0.5, 2.0, 1.0, 0.1, 3.0, 0.9}, 0.4))));
  CHECK(is_regular(tabulate(uniform(1.6), 6)));
  CHECK(is_regular(tabulate(PopularModel{4, 6})));

  // p(a, {a}) = 0.3 but p(a, {a,b}) = 0.5 breaks regularity.
  TabularModel bad;
  bad.ground_size = 2;
  bad.entries = {
      {0b00, kOutsideOption, 1.0}, {0b01, 0, 0.3},           {0b01, kOutsideOption, 0.7},
      {0b10, 1, 0.3},              {0b10, kOutsideOption, 0.7}, {0b11, 0, 0.5},
      {0b11, 1, 0.2},              {0b11, kOutsideOption, 0.3},
  };
  bad.build_index();
  CHECK_FALSE(is_regular(bad));
}

TEST_CASE("submodular demand checker") {
  CHECK(is_submodular_demand(uniform(0.0), 4));
  CHECK(is_submodular_demand(uniform(1.3), 4));
  CHECK(is_submodular_demand(mnl({0.3, 1.0, 2.0, 0.7}, 0.5), 4));
  CHECK(is_submodular_demand(PopularModel{0, 4}, 4));
  CHECK(is_submodular_demand(uniform(0.42), 6));
  CHECK(is_submodular_demand(mnl({0.3, 1.0, 2.0, 0.7, 1.4, 0.2}, 0.8), 6));
  CHECK(is_submodular_demand(PopularModel{3, 6}, 6));

  // Demand jumps only when both options are present: supermodular.
  TabularModel bad;
  bad.ground_size = 2;
  bad.entries = {
      {0b00, kOutsideOption, 1.0}, {0b01, 0, 0.1},           {0b01, kOutsideOption, 0.9},
      {0b10, 1, 0.1},              {0b10, kOutsideOption, 0.9}, {0b11, 0, 0.5},
      {0b11, 1, 0.5},              {0b11, kOutsideOption, 0.0},
  };
  bad.build_index();
  CHECK_FALSE(is_submodular_demand(bad, 2));
}

TEST_CASE("easy-to-match checker") {
  CHECK(is_easy_to_match(mnl({1.0, 2.5, 1.1}), 3));
  CHECK_FALSE(is_easy_to_match(mnl({0.9, 2.5}), 2));
  CHECK(is_easy_to_match(uniform(1.0), 5));
  CHECK_FALSE(is_easy_to_match(uniform(1.01), 5));
  CHECK_FALSE(is_easy_to_match(PopularModel{1, 4}, 4));
}

TEST_CASE("regular models have monotone demand") {
  const std::vector<ChoiceModel> models = {
      mnl({0.5, 1.5, 2.5, 0.2}), uniform(0.8), PopularModel{2, 4}};
  for (const auto& model : models) {
    for (std::uint32_t big = 0; big < 16u; ++big) {
      for (std::uint32_t sub = big;; sub = (sub - 1) & big) {
        CHECK(demand_mask(model, sub) <= demand_mask(model, big) + 1e-12);
        if (sub == 0) break;
      }
    }
  }
}

TEST_CASE("checkers refuse oversized ground sets") {
  CHECK_THROWS_AS(is_submodular_demand(uniform(1.0), 16), std::invalid_argument);
  CHECK_THROWS_AS(tabulate(mnl(std::vector<double>(16, 1.0))),
                  std::invalid_argument);
}

TEST_CASE("tabulation preserves the underlying model") {
  const ChoiceModel original = mnl({0.4, 1.2, 2.0});
  const TabularModel table = tabulate(original);
  for (std::uint32_t mask = 0; mask < 8u; ++mask) {
    std::vector<int> menu;
    for (int k = 0; k < 3; ++k) {
      if ((mask >> k) & 1u) menu.push_back(k);
    }
    CHECK(choice_prob(table, kOutsideOption, menu) ==
          doctest::Approx(choice_prob(original, kOutsideOption, menu))
              .epsilon(1e-12));
    for (int k : menu) {
      CHECK(choice_prob(table, k, menu) ==
            doctest::Approx(choice_prob(original, k, menu)).epsilon(1e-12));
    }
  }
}

}  // namespace
}  // namespace menumatch
