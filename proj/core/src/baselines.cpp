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

#include "menumatch/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "menumatch/rng.hpp"

namespace menumatch {
namespace {

// Uniformly random size-k subset of {0..m-1}, returned sorted.
std::vector<int> random_subset(int m, int k, Rng& rng) {
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  for (int t = 0; t < k; ++t) {
    const int pick = t + static_cast<int>(rng.below(m - t));
    std::swap(pool[t], pool[pick]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<int> subsample(const std::vector<int>& menu, int k, Rng& rng) {
  std::vector<int> copy(menu);
  for (int t = 0; t < k; ++t) {
    const int pick = t + static_cast<int>(rng.below(copy.size() - t));
    std::swap(copy[t], copy[pick]);
  }
  copy.resize(k);
  std::sort(copy.begin(), copy.end());
  return copy;
}

}  // namespace

AssortmentFamily baseline_assortment(BaselineKind kind,
                                     const Instance& instance,
                                     const AssortmentFamily* reference,
                                     std::uint64_t seed) {
  const int n = instance.num_consumers;
  const int m = instance.num_suppliers;
  Rng rng(derive_seed(seed, 0x62617365ULL));
  AssortmentFamily family;
  family.menus.resize(n);
  switch (kind) {
    case BaselineKind::kFullMenu:
      for (int i = 0; i < n; ++i) {
        const int limit = instance.budgets ? (*instance.budgets)[i] : m;
        if (limit >= m) {
          family.menus[i].resize(m);
          std::iota(family.menus[i].begin(), family.menus[i].end(), 0);
        } else {
          family.menus[i] = random_subset(m, limit, rng);
        }
      }
      break;
    case BaselineKind::kHalfRandom:
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
          if (rng.bernoulli(0.5)) family.menus[i].push_back(j);
        }
        const int limit = instance.budgets ? (*instance.budgets)[i] : m;
        if (static_cast<int>(family.menus[i].size()) > limit) {
          family.menus[i] = subsample(family.menus[i], limit, rng);
        }
      }
      break;
    case BaselineKind::kSizeMatchedRandom:
      if (reference == nullptr) {
        throw std::invalid_argument(
            "size-matched baseline requires a reference family");
      }
      for (int i = 0; i < n; ++i) {
        const int size =
            std::min(m, static_cast<int>(reference->menus[i].size()));
        family.menus[i] = random_subset(m, size, rng);
      }
      break;
  }
  return family;
}

}  // namespace menumatch
