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

#include "menumatch/generators.hpp"

#include <stdexcept>

#include "menumatch/rng.hpp"

namespace menumatch {

std::string family_label(InstanceFamily family) {
  switch (family) {
    case InstanceFamily::kMnlMnl:
      return "mnl-mnl";
    case InstanceFamily::kSameMnlUniform:
      return "samemnl-unif";
    case InstanceFamily::kMnlUniform:
      return "mnl-unif";
    case InstanceFamily::kMnlUniformBudgeted:
      return "mnl-unif-k";
  }
  throw std::logic_error("unknown family");
}

InstanceFamily parse_family_label(const std::string& label) {
  if (label == "mnl-mnl") return InstanceFamily::kMnlMnl;
  if (label == "samemnl-unif") return InstanceFamily::kSameMnlUniform;
  if (label == "mnl-unif") return InstanceFamily::kMnlUniform;
  if (label == "mnl-unif-k") return InstanceFamily::kMnlUniformBudgeted;
  throw std::invalid_argument("unknown instance family: " + label);
}

Instance generate_instance(const GenSpec& spec) {
  const int n = spec.num_consumers;
  const int m = spec.num_suppliers;
  if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
  if (!(spec.lambda_v > 0.0) || !(spec.lambda_0 > 0.0)) {
    throw std::invalid_argument("rates must be positive");
  }
  Instance instance;
  instance.num_consumers = n;
  instance.num_suppliers = m;
  instance.revenues.assign(m, 1.0);
  // Draw order is fixed: consumer scores first, then supplier scores,
  // consumer-major / supplier-major respectively.
  Rng rng(derive_seed(spec.seed, 0x67656eULL));

  switch (spec.family) {
    case InstanceFamily::kMnlMnl: {
      for (int i = 0; i < n; ++i) {
        MnlModel consumer;
        consumer.outside_weight = 1.0;
        consumer.weights.resize(m);
        for (int j = 0; j < m; ++j) consumer.weights[j] = rng.uniform(1.0, 5.0);
        instance.consumer_models.emplace_back(std::move(consumer));
      }
      for (int j = 0; j < m; ++j) {
        MnlModel supplier;
        supplier.outside_weight = 1.0;
        supplier.weights.resize(n);
        for (int i = 0; i < n; ++i) supplier.weights[i] = rng.uniform(0.01, 1.0);
        instance.supplier_models.emplace_back(std::move(supplier));
      }
      break;
    }
    case InstanceFamily::kSameMnlUniform: {
      std::vector<double> shared(m);
      for (int j = 0; j < m; ++j) {
        shared[j] = 1.0 / (1.0 + rng.exponential(spec.lambda_v));
      }
      for (int i = 0; i < n; ++i) {
        MnlModel consumer{shared, 1.0};
        instance.consumer_models.emplace_back(std::move(consumer));
      }
      for (int j = 0; j < m; ++j) {
        UniformModel supplier{1.0 / (1.0 + rng.exponential(spec.lambda_0))};
        instance.supplier_models.emplace_back(supplier);
      }
      break;
    }
    case InstanceFamily::kMnlUniform:
    case InstanceFamily::kMnlUniformBudgeted: {
      const double lambda_v =
          spec.family == InstanceFamily::kMnlUniformBudgeted ? 1.0
                                                             : spec.lambda_v;
      const double lambda_0 =
          spec.family == InstanceFamily::kMnlUniformBudgeted ? 1.0
                                                             : spec.lambda_0;
      for (int i = 0; i < n; ++i) {
        MnlModel consumer;
        consumer.outside_weight = 1.0;
        consumer.weights.resize(m);
        for (int j = 0; j < m; ++j) {
          consumer.weights[j] = 1.0 / (1.0 + rng.exponential(lambda_v));
        }
        instance.consumer_models.emplace_back(std::move(consumer));
      }
      for (int j = 0; j < m; ++j) {
        UniformModel supplier{1.0 / (1.0 + rng.exponential(lambda_0))};
        instance.supplier_models.emplace_back(supplier);
      }
      if (spec.family == InstanceFamily::kMnlUniformBudgeted) {
        if (spec.budget < 1 || spec.budget > m) {
          throw std::invalid_argument("budget must be in [1, m]");
        }
        instance.budgets = std::vector<int>(n, spec.budget);
      }
      break;
    }
  }
  return instance;
}

}  // namespace menumatch
