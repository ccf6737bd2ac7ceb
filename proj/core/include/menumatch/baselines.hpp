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

#ifndef MENUMATCH_BASELINES_HPP_
#define MENUMATCH_BASELINES_HPP_

#include <cstdint>

#include "menumatch/instance.hpp"

namespace menumatch {

// Trivial comparison assortments:
//   kFullMenu (vn): every supplier in every menu; under budgets each menu is
//     a uniformly random K_i-subset instead.
//   kHalfRandom (r1): each pair included with probability 1/2; oversized
//     menus are subsampled uniformly to the budget.
//   kSizeMatchedRandom (r2): per consumer, a uniformly random menu with
//     exactly the size of the reference menu.
enum class BaselineKind { kFullMenu, kHalfRandom, kSizeMatchedRandom };

AssortmentFamily baseline_assortment(BaselineKind kind,
                                     const Instance& instance,
                                     const AssortmentFamily* reference,
                                     std::uint64_t seed);

}  // namespace menumatch

#endif  // MENUMATCH_BASELINES_HPP_
