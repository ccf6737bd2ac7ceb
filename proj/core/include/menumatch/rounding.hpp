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

#ifndef MENUMATCH_ROUNDING_HPP_
#define MENUMATCH_ROUNDING_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "menumatch/instance.hpp"

namespace menumatch {

// Include each (consumer, supplier) pair independently with probability
// x_ij. Deterministic given seed.
AssortmentFamily round_independent(const FractionalAssortment& x,
                                   std::uint64_t seed);

// Pairwise dependent rounding of one fractional vector. Repeatedly moves the
// two lowest-indexed fractional coordinates toward {0,1}: with probability
// delta/(eps+delta) add eps to the first and subtract it from the second,
// otherwise move by delta the opposite way, where eps and delta are the
// largest moves that hit a bound. A single leftover fractional coordinate is
// rounded by its value. Guarantees exact marginals, a final sum in
// {floor(sum), ceil(sum)}, and negatively correlated coordinates.
std::vector<int> round_dependent(std::span<const double> x,
                                 std::uint64_t seed);

// Dependent rounding applied to every row of x with per-row streams derived
// from seed.
AssortmentFamily round_dependent_rows(const FractionalAssortment& x,
                                      std::uint64_t seed);

// Rescale any row whose sum exceeds its limit down to the limit, so that
// sum-preserving rounding can never overshoot a budget numerically.
void cap_row_sums(FractionalAssortment& x, std::span<const int> limits);

}  // namespace menumatch

#endif  // MENUMATCH_ROUNDING_HPP_
