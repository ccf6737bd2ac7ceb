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

#ifndef MENUMATCH_GENERATORS_HPP_
#define MENUMATCH_GENERATORS_HPP_

#include <cstdint>
#include <string>

#include "menumatch/instance.hpp"

namespace menumatch {

// Random instance families of the computational study. All revenues are 1.
//
//   mnl-mnl:      v_ij ~ U(1,5); suppliers MNL, u_j0 = 1, u_ji ~ U(0.01,1)
//   samemnl-unif: shared v_j = 1/(1+Z_j), Z_j ~ Exp(lambda_v);
//                 suppliers Uniform, u_j0 = 1/(1+W_j), W_j ~ Exp(lambda_0)
//   mnl-unif:     per-consumer v_ij = 1/(1+Z_ij), suppliers as above
//   mnl-unif-k:   mnl-unif with lambda_v = lambda_0 = 1 and budgets K_i = k
enum class InstanceFamily {
  kMnlMnl,
  kSameMnlUniform,
  kMnlUniform,
  kMnlUniformBudgeted,
};

std::string family_label(InstanceFamily family);
InstanceFamily parse_family_label(const std::string& label);

struct GenSpec {
  InstanceFamily family = InstanceFamily::kMnlUniform;
  int num_consumers = 0;
  int num_suppliers = 0;
  double lambda_v = 1.0;
  double lambda_0 = 1.0;
  int budget = 0;  // mnl-unif-k only
  std::uint64_t seed = 0;
};

// Deterministic given spec.seed; identical specs serialize to identical
// instance bytes.
Instance generate_instance(const GenSpec& spec);

}  // namespace menumatch

#endif  // MENUMATCH_GENERATORS_HPP_
