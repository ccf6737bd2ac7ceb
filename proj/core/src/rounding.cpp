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

#include "menumatch/rounding.hpp"

#include <algorithm>
#include <cmath>

#include "menumatch/rng.hpp"

namespace menumatch {
namespace {

// Coordinates this close to a bound are snapped and treated as integral;
// keeps the sum exact despite float drift at polytope faces.
constexpr double kSnapTol = 1e-12;

double snap(double v) {
  if (v < kSnapTol) return 0.0;
  if (v > 1.0 - kSnapTol) return 1.0;
  return v;
}

bool fractional(double v) { return v > 0.0 && v < 1.0; }

}  // namespace

AssortmentFamily round_independent(const FractionalAssortment& x,
                                   std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x696e6470ULL));
  AssortmentFamily family;
  family.menus.resize(x.rows);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) {
      if (rng.bernoulli(x.at(i, j))) family.menus[i].push_back(j);
    }
  }
  return family;
}

std::vector<int> round_dependent(std::span<const double> x,
                                 std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x64657070ULL));
  const int size = static_cast<int>(x.size());
  std::vector<double> work(size);
  for (int k = 0; k < size; ++k) work[k] = snap(std::clamp(x[k], 0.0, 1.0));

  while (true) {
    // The two lowest-indexed fractional coordinates.
    int a = -1, b = -1;
    for (int k = 0; k < size; ++k) {
      if (!fractional(work[k])) continue;
      if (a < 0) {
        a = k;
      } else {
        b = k;
        break;
      }
    }
    if (a < 0) break;
    if (b < 0) {
      work[a] = rng.bernoulli(work[a]) ? 1.0 : 0.0;
      break;
    }
    const double up = std::min(1.0 - work[a], work[b]);
    const double down = std::min(work[a], 1.0 - work[b]);
    if (rng.uniform01() < down / (up + down)) {
      work[a] = snap(work[a] + up);
      work[b] = snap(work[b] - up);
    } else {
      work[a] = snap(work[a] - down);
      work[b] = snap(work[b] + down);
    }
  }

  std::vector<int> out(size);
  for (int k = 0; k < size; ++k) out[k] = work[k] > 0.5 ? 1 : 0;
  return out;
}

void cap_row_sums(FractionalAssortment& x, std::span<const int> limits) {
  for (int i = 0; i < x.rows; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < x.cols; ++j) row_sum += x.at(i, j);
    const double limit = static_cast<double>(limits[i]);
    if (row_sum > limit) {
      const double scale = limit / row_sum;
      for (int j = 0; j < x.cols; ++j) x.at(i, j) *= scale;
    }
  }
}

AssortmentFamily round_dependent_rows(const FractionalAssortment& x,
                                      std::uint64_t seed) {
  AssortmentFamily family;
  family.menus.resize(x.rows);
  for (int i = 0; i < x.rows; ++i) {
    std::span<const double> row(
        x.values.data() + static_cast<std::size_t>(i) * x.cols,
        static_cast<std::size_t>(x.cols));
    const auto bits = round_dependent(row, derive_seed(seed, 0x726f77ULL,
                                                       static_cast<std::uint64_t>(i)));
    for (int j = 0; j < x.cols; ++j) {
      if (bits[j]) family.menus[i].push_back(j);
    }
  }
  return family;
}

}  // namespace menumatch
