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

#ifndef SUBMAX_VERIFY_H_
#define SUBMAX_VERIFY_H_

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/independence.hpp"
#include "submax/instances.hpp"
#include "submax/objective.hpp"
#include "submax/report.hpp"

namespace submax {

struct BruteForceResult {
  ElementSet opt_set;
  double opt_value = 0.0;
  std::int64_t feasible_count = 0;
};

// Enumerates all 2^n subsets (hard error above n = 20), filters by the
// independence system and the knapsack budgets, and maximizes f. Ties go to
// the lexicographically smallest member list. Uses the raw oracles, so it
// never touches any algorithm's call counters.
BruteForceResult brute_force_opt(const GroundSet& ground, const Objective& f,
                                 const IndependenceSystem& indep,
                                 const KnapsackSet& sacks = KnapsackSet());

// True iff every knapsack total of s stays within its (unit) budget.
bool knapsack_feasible(const KnapsackSet& sacks, const ElementSet& s);

// Exhaustively verifies the k-extendible exchange property (hard error above
// n = 10): for every independent A subseteq B and u not in B with A + u
// independent, some Y subseteq B \ A with |Y| <= k has (B \ Y) + u
// independent.
bool check_extendible(const IndependenceSystem& indep, const GroundSet& ground,
                      int k);

// Exhaustively verifies the k-system base-ratio property (hard error above
// n = 10): within every subset of the ground set, the sizes of any two
// maximal independent subsets differ by at most a factor k.
bool check_k_system(const IndependenceSystem& indep, const GroundSet& ground,
                    int k);

// Exhaustive diminishing-returns / monotonicity checks at n <= 10 with
// tolerance 1e-9.
bool check_submodular(const Objective& f, const GroundSet& ground);
bool check_monotone(const Objective& f, const GroundSet& ground);

struct HarnessRow {
  std::string instance;
  std::string algorithm;
  double value = 0.0;
  double opt = 0.0;
  double ratio = 0.0;  // value / opt, or 1 when opt is 0
  std::int64_t calls = 0;
  double bound = 0.0;
  bool pass = false;
};

// One algorithm under test: `run` executes it against freshly counted
// oracles; `bound` maps (instance, brute-force optimum, run report) to the
// value the theorem promises. The report is passed so case-split bounds can
// read the knapsack-rejection flag and parameters.
struct HarnessAlgo {
  std::string name;
  std::function<RunReport(const Instance&, CountedObjective&,
                          CountedIndependence&)>
      run;
  std::function<double(const Instance&, double, const RunReport&)> bound;
};

// A named pool of instances with the algorithms whose guarantees hold on it.
struct HarnessSuite {
  std::string name;
  std::vector<HarnessAlgo> algorithms;
  std::function<Instance(std::uint64_t)> generate;
};

// Runs every algorithm on `trials` generated instances; each row passes when
// value >= bound - 1e-9. Deterministic in (generator, trials, seed).
std::vector<HarnessRow> ratio_harness(
    const std::vector<HarnessAlgo>& algorithms,
    const std::function<Instance(std::uint64_t)>& generate, int trials,
    std::uint64_t seed);

// Columns: instance,algorithm,value,opt,ratio,calls,bound,pass.
void write_harness_csv(std::ostream& out, const std::vector<HarnessRow>& rows);

// The theorem-bound suites shared by the CLI verifier and the acceptance
// checks: exchange-bound ratios for the simultaneous and repeated families,
// knapsack case splits, density-search end-to-end bounds, and monotone
// specializations.
std::vector<HarnessSuite> standard_suites();

}  // namespace submax

#endif  // SUBMAX_VERIFY_H_
