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

#ifndef MENUMATCH_JSON_IO_HPP_
#define MENUMATCH_JSON_IO_HPP_

#include <string>

#include "menumatch/bench.hpp"
#include "menumatch/instance.hpp"

namespace menumatch {

// Instance schema (all indices and options 1-based on disk, reals lossless):
//   { "n": int, "m": int, "revenues": [..], "budgets": [..] | null,
//     "consumers": [model..], "suppliers": [model..] }
// with model one of
//   { "kind": "mnl", "weights": [..], "outside_weight": w }
//   { "kind": "uniform", "outside_weight": w }
//   { "kind": "tabular", "ground_size": g, "entries": [[mask, option, p]..] }
//     (menu bitmask bit k-1 <-> element k; option 0 is the outside option)
//   { "kind": "popular", "popular_index": l, "ground_size": g }
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

// { "menus": [[1-based supplier..]..] }
std::string family_to_json(const AssortmentFamily& family);
AssortmentFamily family_from_json(const std::string& text);

// { "value": v, "stderr": s | null, "per_supplier": [..] }
std::string eval_result_to_json(const EvalResult& result);

// { "seed", "instances_per_cell", "rounding_seeds", "mc_trials",
//   "algorithms": [..],
//   "cells": [ { "family", "n", "m", "lambda_v"?, "lambda_0"?, "k"?,
//                "algorithms"? } .. ] }
BenchConfig bench_config_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace menumatch

#endif  // MENUMATCH_JSON_IO_HPP_
