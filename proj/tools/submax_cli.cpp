// Copyright 2026 The submax Authors.
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "submax/constraints.hpp"
#include "submax/experiment.hpp"
#include "submax/objectives.hpp"
#include "submax/report.hpp"
#include "submax/verify.hpp"

namespace {

int cmd_run(const std::string& config_path) {
  submax::ExperimentConfig config = submax::load_config(config_path);
  if (config.output.empty()) {
    submax::run_experiment(config, std::cout, &std::cerr);
  } else {
    std::ofstream out(config.output);
    if (!out) {
      throw std::runtime_error(config.output + ": cannot open for writing");
    }
    submax::run_experiment(config, out, &std::cerr);
    std::cerr << "report written to " << config.output << "\n";
  }
  return 0;
}

int cmd_verify(int trials, std::uint64_t seed, const std::string& filter,
               const std::string& out_path) {
  std::vector<submax::HarnessRow> all;
  bool matched = false;
  for (const submax::HarnessSuite& suite : submax::standard_suites()) {
    if (!filter.empty() && suite.name != filter) continue;
    matched = true;
    std::vector<submax::HarnessRow> rows =
        submax::ratio_harness(suite.algorithms, suite.generate, trials, seed);
    int passed = 0;
    for (const submax::HarnessRow& r : rows) passed += r.pass ? 1 : 0;
    std::cout << "suite " << suite.name << ": " << passed << "/" << rows.size()
              << " pass\n";
    all.insert(all.end(), rows.begin(), rows.end());
  }
  if (!matched) throw std::runtime_error("no suite named '" + filter + "'");
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      throw std::runtime_error(out_path + ": cannot open for writing");
    }
    submax::write_harness_csv(out, all);
  }
  int failures = 0;
  for (const submax::HarnessRow& r : all) failures += r.pass ? 0 : 1;
  if (failures > 0) {
    std::cout << "FAIL: " << failures << " of " << all.size()
              << " rows below their bound\n";
    return 1;
  }
  std::cout << "OK: all " << all.size() << " rows meet their bounds\n";
  return 0;
}

// Maximum independent set size = brute-force OPT of the all-ones modular
// objective under the system.
double max_independent_size(const submax::GroundSet& ground,
                            const submax::IndependenceSystem& system) {
  auto ones = submax::make_modular(std::vector<double>(ground.n, 1.0));
  return submax::brute_force_opt(ground, *ones, system).opt_value;
}

int cmd_hardness(int k, int h, int m) {
  const int n = h * k * m;
  submax::GroundSet ground{n};
  auto system_m = submax::build_hardness_system(k, h, m);
  auto system_card = submax::build_cardinality(n, m);
  std::cout << "n: " << n << "\n";
  std::cout << "M max independent size: "
            << submax::format_double(max_independent_size(ground, *system_m))
            << "\n";
  std::cout << "predicted: "
            << submax::format_double(
                   submax::hardness_max_independent_size(k, h, m))
            << "\n";
  std::cout << "M' max independent size: "
            << submax::format_double(
                   max_independent_size(ground, *system_card))
            << "\n";
  return 0;
}

int cmd_bruteforce(const std::string& config_path) {
  submax::ExperimentConfig config = submax::load_config(config_path);
  std::optional<double> point;
  if (!config.sweep.param.empty()) point = config.sweep.values.front();
  submax::AssembledInstance inst = submax::assemble_instance(config, point);
  for (const std::string& w : inst.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  submax::BruteForceResult result = submax::brute_force_opt(
      inst.ground, *inst.objective, *inst.constraint, inst.knapsacks);
  std::cout << "feasible sets: " << result.feasible_count << "\n";
  std::cout << "opt value: " << submax::format_double(result.opt_value)
            << "\n";
  std::cout << "opt set:";
  for (int u : result.opt_set) std::cout << " " << inst.labels[u];
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "submax: maximize non-negative submodular functions under k-system "
      "and knapsack constraints"};
  app.require_subcommand(1);

  std::string run_config;
  CLI::App* run = app.add_subcommand("run", "Run a JSON-configured experiment");
  run->add_option("config", run_config, "JSON config file")->required();

  int trials = 8;
  std::uint64_t seed = 1;
  std::string suite_filter, verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check approximation bounds against brute-force optima");
  verify->add_option("--trials", trials, "Instances per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Base RNG seed");
  verify->add_option("--suite", suite_filter, "Run only the named suite");
  verify->add_option("--out", verify_out, "Write the row CSV to this path");

  int hk = 1, hh = 2, hm = 1;
  // The single-letter "--h" family option would collide with the default
  // "-h" help short flag, so this subcommand keeps only "--help".
  CLI::App* hardness = app.add_subcommand(
      "hardness", "Brute-force the structured hard family's independence "
                  "numbers");
  hardness->set_help_flag("--help", "Print this help message and exit");
  hardness->add_option("--k", hk, "Exchange parameter")->required();
  hardness->add_option("--h", hh, "Group count (multiple of 2k)")->required();
  hardness->add_option("--m", hm, "Budget")->required();

  std::string brute_config;
  CLI::App* brute = app.add_subcommand(
      "bruteforce", "Print the exact optimum of a tiny configured instance");
  brute->add_option("config", brute_config, "JSON config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_config);
    if (*verify) return cmd_verify(trials, seed, suite_filter, verify_out);
    if (*hardness) return cmd_hardness(hk, hh, hm);
    if (*brute) return cmd_bruteforce(brute_config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
