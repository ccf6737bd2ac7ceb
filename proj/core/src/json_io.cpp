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

#include "menumatch/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace menumatch {
namespace {

using nlohmann::json;

json model_to_json(const ChoiceModel& model) {
  json out;
  if (const auto* mnl = std::get_if<MnlModel>(&model)) {
    out["kind"] = "mnl";
    out["weights"] = mnl->weights;
    out["outside_weight"] = mnl->outside_weight;
  } else if (const auto* uni = std::get_if<UniformModel>(&model)) {
    out["kind"] = "uniform";
    out["outside_weight"] = uni->outside_weight;
  } else if (const auto* tab = std::get_if<TabularModel>(&model)) {
    out["kind"] = "tabular";
    out["ground_size"] = tab->ground_size;
    json entries = json::array();
    for (const auto& [mask, option, prob] : tab->entries) {
      entries.push_back(json::array({mask, option + 1, prob}));
    }
    out["entries"] = std::move(entries);
  } else if (const auto* pop = std::get_if<PopularModel>(&model)) {
    out["kind"] = "popular";
    out["popular_index"] = pop->popular_index + 1;
    out["ground_size"] = pop->ground_size;
  }
  return out;
}

ChoiceModel model_from_json(const json& in) {
  const std::string kind = in.at("kind").get<std::string>();
  if (kind == "mnl") {
    MnlModel model;
    model.weights = in.at("weights").get<std::vector<double>>();
    model.outside_weight = in.at("outside_weight").get<double>();
    return model;
  }
  if (kind == "uniform") {
    return UniformModel{in.at("outside_weight").get<double>()};
  }
  if (kind == "tabular") {
    TabularModel model;
    model.ground_size = in.at("ground_size").get<int>();
    for (const auto& entry : in.at("entries")) {
      model.entries.emplace_back(entry.at(0).get<std::uint32_t>(),
                                 entry.at(1).get<int>() - 1,
                                 entry.at(2).get<double>());
    }
    model.build_index();
    return model;
  }
  if (kind == "popular") {
    PopularModel model;
    model.popular_index = in.at("popular_index").get<int>() - 1;
    model.ground_size = in.at("ground_size").get<int>();
    return model;
  }
  throw std::invalid_argument("unknown model kind: " + kind);
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  json out;
  out["n"] = instance.num_consumers;
  out["m"] = instance.num_suppliers;
  out["revenues"] = instance.revenues;
  if (instance.budgets) {
    out["budgets"] = *instance.budgets;
  } else {
    out["budgets"] = nullptr;
  }
  json consumers = json::array();
  for (const auto& model : instance.consumer_models) {
    consumers.push_back(model_to_json(model));
  }
  out["consumers"] = std::move(consumers);
  json suppliers = json::array();
  for (const auto& model : instance.supplier_models) {
    suppliers.push_back(model_to_json(model));
  }
  out["suppliers"] = std::move(suppliers);
  return out.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  const json in = json::parse(text);
  Instance instance;
  instance.num_consumers = in.at("n").get<int>();
  instance.num_suppliers = in.at("m").get<int>();
  if (in.contains("revenues") && !in.at("revenues").is_null()) {
    instance.revenues = in.at("revenues").get<std::vector<double>>();
  } else {
    // omitted revenues mean the max-cardinality objective
    instance.revenues.assign(instance.num_suppliers, 1.0);
  }
  if (in.contains("budgets") && !in.at("budgets").is_null()) {
    instance.budgets = in.at("budgets").get<std::vector<int>>();
  }
  for (const auto& model : in.at("consumers")) {
    instance.consumer_models.push_back(model_from_json(model));
  }
  for (const auto& model : in.at("suppliers")) {
    instance.supplier_models.push_back(model_from_json(model));
  }
  return instance;
}

std::string family_to_json(const AssortmentFamily& family) {
  json menus = json::array();
  for (const auto& menu : family.menus) {
    json row = json::array();
    for (int j : menu) row.push_back(j + 1);
    menus.push_back(std::move(row));
  }
  json out;
  out["menus"] = std::move(menus);
  return out.dump(2) + "\n";
}

AssortmentFamily family_from_json(const std::string& text) {
  const json in = json::parse(text);
  AssortmentFamily family;
  for (const auto& row : in.at("menus")) {
    std::vector<int> menu;
    for (const auto& j : row) menu.push_back(j.get<int>() - 1);
    std::sort(menu.begin(), menu.end());
    family.menus.push_back(std::move(menu));
  }
  return family;
}

std::string eval_result_to_json(const EvalResult& result) {
  json out;
  out["value"] = result.value;
  if (result.std_err) {
    out["stderr"] = *result.std_err;
  } else {
    out["stderr"] = nullptr;
  }
  out["per_supplier"] = result.per_supplier;
  return out.dump(2) + "\n";
}

BenchConfig bench_config_from_json(const std::string& text) {
  const json in = json::parse(text);
  BenchConfig config;
  config.seed = in.value("seed", std::uint64_t{0});
  config.instances_per_cell = in.value("instances_per_cell", 10);
  config.rounding_seeds = in.value("rounding_seeds", 10);
  config.mc_trials = in.value("mc_trials", 1000);
  if (in.contains("algorithms")) {
    config.algorithms = in.at("algorithms").get<std::vector<std::string>>();
  }
  for (const auto& cell_json : in.at("cells")) {
    BenchCell cell;
    cell.gen.family =
        parse_family_label(cell_json.at("family").get<std::string>());
    cell.gen.num_consumers = cell_json.at("n").get<int>();
    cell.gen.num_suppliers = cell_json.at("m").get<int>();
    cell.gen.lambda_v = cell_json.value("lambda_v", 1.0);
    cell.gen.lambda_0 = cell_json.value("lambda_0", 1.0);
    cell.gen.budget = cell_json.value("k", 0);
    if (cell_json.contains("algorithms")) {
      cell.algorithms =
          cell_json.at("algorithms").get<std::vector<std::string>>();
    }
    config.cells.push_back(std::move(cell));
  }
  return config;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace menumatch
