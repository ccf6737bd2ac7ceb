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

#ifndef MENUMATCH_RNG_HPP_
#define MENUMATCH_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace menumatch {

// Splittable stream derivation: every concurrent unit of work (trial,
// consumer row, benchmark cell, ...) seeds its own engine from
// derive_seed(master, tag...), so results do not depend on scheduling.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed) { return mix64(seed); }

template <typename... Tags>
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                    Tags... rest) {
  return derive_seed(mix64(seed ^ mix64(tag ^ 0xd1b54a32d192ed03ULL)), rest...);
}

// mt19937_64 plus hand-rolled samplers. The std:: distributions are
// implementation-defined, which would break byte-identical outputs across
// toolchains; these samplers are fully specified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(derive_seed(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double exponential(double rate) {
    return -std::log1p(-uniform01()) / rate;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  // Index into probs, with the residual mass 1 - sum(probs) mapped to -1.
  int categorical_or_none(std::span<const double> probs) {
    double u = uniform01();
    for (std::size_t k = 0; k < probs.size(); ++k) {
      u -= probs[k];
      if (u < 0.0) return static_cast<int>(k);
    }
    return -1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace menumatch

#endif  // MENUMATCH_RNG_HPP_
