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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "menumatch/baselines.hpp"
#include "menumatch/bench.hpp"
#include "menumatch/concave.hpp"
#include "menumatch/evaluate.hpp"
#include "menumatch/json_io.hpp"
#include "menumatch/mnl_lp.hpp"
#include "menumatch/rng.hpp"
#include "menumatch/welfare.hpp"

namespace {

using namespace menumatch;

Instance load_instance(const std::string& path) {
  Instance instance = instance_from_json(read_text_file(path));
  const auto violations = validate(instance);
  if (!violations.empty()) {
    std::string message = "invalid instance " + path + ":";
    for (const auto& v : violations) message += "\n  " + v;
    throw std::runtime_error(message);
  }
  return instance;
}

struct RunOptions {
  std::string instance_path;
  std::string algorithm;
  std::string output_path;
  std::string lp_dump_path;
  std::uint64_t seed = 0;
  int fw_iters = 500;
  double fw_tol = 1e-6;
  int trials = 1000;
};

AssortmentFamily run_algorithm(const RunOptions& options,
                               const Instance& instance) {
  const ContinuousGreedyConfig cg;
  FrankWolfeConfig fw;
  fw.max_iters = options.fw_iters;
  fw.tol = options.fw_tol;
  const std::string& alg = options.algorithm;
  if (alg == "alg1-greedy") {
    return welfare_assortment(instance, WelfareSolver::kGreedy, cg,
                              options.seed);
  }
  if (alg == "alg1-cg") {
    return welfare_assortment(instance, WelfareSolver::kContinuousGreedy, cg,
                              options.seed);
  }
  if (alg == "alg2") return lp_rounding_assortment(instance, options.seed);
  if (alg == "alg3") {
    return lp_rounding_assortment_budgeted(instance, options.seed);
  }
  if (alg == "alg4") {
    return concave_rounding_assortment(instance, fw, options.seed);
  }
  if (alg == "alg5") {
    return concave_rounding_assortment_budgeted(instance, fw, options.seed);
  }
  if (alg == "split") return split_by_score_assortment(instance, options.seed);
  if (alg == "vn") {
    return baseline_assortment(BaselineKind::kFullMenu, instance, nullptr,
                               options.seed);
  }
  if (alg == "r1") {
    return baseline_assortment(BaselineKind::kHalfRandom, instance, nullptr,
                               options.seed);
  }
  throw std::runtime_error("unknown algorithm: " + alg);
}

int do_gen(const std::string& family, int n, int m, double lambda_v,
           double lambda_0, int k, std::uint64_t seed,
           const std::string& output) {
  GenSpec spec;
  spec.family = parse_family_label(family);
  spec.num_consumers = n;
  spec.num_suppliers = m;
  spec.lambda_v = lambda_v;
  spec.lambda_0 = lambda_0;
  spec.budget = k;
  spec.seed = seed;
  const Instance instance = generate_instance(spec);
  const std::string text = instance_to_json(instance);
  if (output.empty() || output == "-") {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_file(output, text);
    std::fprintf(stderr, "wrote %s\n", output.c_str());
  }
  return 0;
}

int do_eval(const std::string& instance_path, const std::string& family_path,
            const std::string& mode, int trials, std::uint64_t seed) {
  const Instance instance = load_instance(instance_path);
  const AssortmentFamily family =
      family_from_json(read_text_file(family_path));
  if (!family_feasible(instance, family)) {
    throw std::runtime_error("family is not feasible for this instance");
  }
  if (mode == "sandwich") {
    const SandwichBound bound = sandwich_bounds(instance, family);
    std::printf("{\n  \"lower\": %.12g,\n  \"upper\": %.12g,\n  \"q_min\": %.12g\n}\n",
                bound.lower, bound.upper, bound.min_singleton_demand);
    return 0;
  }
  EvalResult result;
  if (mode == "exact") {
    result = expected_revenue_exact(instance, family);
  } else if (mode == "mc") {
    result = simulate(instance, family, trials, seed);
  } else {
    throw std::runtime_error("mode must be exact, mc or sandwich");
  }
  std::fputs(eval_result_to_json(result).c_str(), stdout);
  return 0;
}

int do_run(const RunOptions& options) {
  const Instance instance = load_instance(options.instance_path);
  if (!options.lp_dump_path.empty()) {
    const auto lp = instance.budgets ? build_assortment_lp_budgeted(instance)
                                     : build_assortment_lp(instance);
    std::ofstream out(options.lp_dump_path);
    write_lp_text(lp, out);
    std::fprintf(stderr, "wrote %s\n", options.lp_dump_path.c_str());
  }
  const AssortmentFamily family = run_algorithm(options, instance);
  if (!options.output_path.empty()) {
    write_text_file(options.output_path, family_to_json(family));
    std::fprintf(stderr, "wrote %s\n", options.output_path.c_str());
  }
  EvalResult result;
  const bool exact = exact_evaluation_available(instance, family);
  if (exact) {
    result = expected_revenue_exact(instance, family);
  } else {
    result = simulate(instance, family, options.trials,
                      derive_seed(options.seed, 0x6576616cULL));
  }
  std::printf("{\n  \"algorithm\": \"%s\",\n  \"mode\": \"%s\",\n",
              options.algorithm.c_str(), exact ? "exact" : "mc");
  std::printf("  \"value\": %.12g", result.value);
  if (result.std_err) std::printf(",\n  \"stderr\": %.12g", *result.std_err);
  std::printf("\n}\n");
  return 0;
}

int do_bench(const std::string& config_path, const std::string& output) {
  const BenchConfig config = bench_config_from_json(read_text_file(config_path));
  const auto rows = run_bench(config);
  const std::string csv = rows_to_csv(rows);
  if (output.empty() || output == "-") {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text_file(output, csv);
    std::fprintf(stderr, "wrote %s\n", output.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assortment optimization for two-sided sequential matching"};
  app.require_subcommand(1);

  // gen
  std::string family = "mnl-unif", output;
  int n = 20, m = 20, k = 0;
  double lambda_v = 1.0, lambda_0 = 1.0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", family,
                  "mnl-mnl | samemnl-unif | mnl-unif | mnl-unif-k");
  gen->add_option("--n", n, "number of consumers");
  gen->add_option("--m", m, "number of suppliers");
  gen->add_option("--lambda-v", lambda_v, "consumer score rate");
  gen->add_option("--lambda-0", lambda_0, "supplier outside-score rate");
  gen->add_option("--k", k, "budget (mnl-unif-k)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("-o,--output", output, "output path (default stdout)");

  // eval
  std::string instance_path, family_path, mode = "exact";
  int trials = 1000;
  auto* eval = app.add_subcommand("eval", "Evaluate a family on an instance");
  eval->add_option("--instance", instance_path, "instance JSON")->required();
  eval->add_option("--family", family_path, "family JSON")->required();
  eval->add_option("--mode", mode, "exact | mc | sandwich");
  eval->add_option("--trials", trials, "Monte Carlo trials");
  eval->add_option("--seed", seed, "Monte Carlo seed");

  // run
  RunOptions run_options;
  auto* run = app.add_subcommand("run", "Run an assortment algorithm");
  run->add_option("--instance", run_options.instance_path, "instance JSON")
      ->required();
  run->add_option("--alg", run_options.algorithm,
                  "alg1-greedy | alg1-cg | alg2 | alg3 | alg4 | alg5 | split "
                  "| vn | r1")
      ->required();
  run->add_option("--seed", run_options.seed, "algorithm seed");
  run->add_option("-o,--output", run_options.output_path, "family JSON path");
  run->add_option("--lp-dump", run_options.lp_dump_path,
                  "write the assortment LP in text form");
  run->add_option("--fw-iters", run_options.fw_iters,
                  "Frank-Wolfe iteration cap");
  run->add_option("--fw-tol", run_options.fw_tol, "Frank-Wolfe gap tolerance");
  run->add_option("--trials", run_options.trials,
                  "Monte Carlo trials when exact evaluation is unavailable");

  // bench
  std::string config_path;
  auto* bench = app.add_subcommand("bench", "Run the experiment harness");
  bench->add_option("--config", config_path, "bench config JSON")->required();
  bench->add_option("-o,--output", output, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return do_gen(family, n, m, lambda_v, lambda_0, k, seed, output);
    }
    if (eval->parsed()) {
      return do_eval(instance_path, family_path, mode, trials, seed);
    }
    if (run->parsed()) return do_run(run_options);
    if (bench->parsed()) return do_bench(config_path, output);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "menumatch: %s\n", e.what());
    return 1;
  }
  return 0;
}
