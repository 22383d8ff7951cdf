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

#ifndef SUBMAX_GREEDY_INTERNAL_H_
#define SUBMAX_GREEDY_INTERNAL_H_

#include <cstdint>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/independence.hpp"
#include "submax/objective.hpp"
#include "submax/report.hpp"
#include "submax/sgs.hpp"

namespace submax {
namespace internal {

// Shared engine state produced by the descending-threshold sweep.
struct SweepOutcome {
  std::vector<SolutionState> solutions;
  std::vector<double> singleton_value;  // f({u}); NaN for unavailable u
  double empty_value = 0.0;
  double delta_f = 0.0;     // max available singleton value
  int best_singleton = -1;  // argmax among knapsack-feasible singletons
  bool rejected = false;    // some pair failed a budget check after gating
  int rounds = 0;
};

// The engine behind fast_sgs, knapsack_sgs and the thresholded single-pass
// greedy: scans (element, solution) pairs in ascending order per round while
// tau decays by (1-eps) from max f({u}) down to (eps/n) max f({u}).
// `available` (optional) masks the working ground set. `track_singleton`
// additionally records the best feasible singleton (the extra candidate of
// the knapsack variants); a singleton only qualifies when it is independent
// and within every budget, so the final argmax never leaves the feasible
// region.
SweepOutcome threshold_sweep(const GroundSet& ground, CountedObjective& f,
                             CountedIndependence& indep,
                             const KnapsackSet& sacks, int ell, double rho,
                             double eps, bool track_singleton,
                             const std::vector<char>* available,
                             RunAudit* audit);

// The engine behind simultaneous_greedys and greedy: lazily revalidated
// best-pair selection with strictly positive gains.
std::vector<SolutionState> exact_multi_greedy(
    const GroundSet& ground, CountedObjective& f, CountedIndependence& indep,
    int ell, const std::vector<char>* available, RunAudit* audit);

// Shared report plumbing: picks the best candidate (first wins ties), fills
// solution/value (value recomputed on the raw objective) and the call deltas.
void finish_report(RunReport& report, CountedObjective& f,
                   CountedIndependence& indep, std::int64_t value_calls_before,
                   std::int64_t indep_calls_before);

void validate_run(const GroundSet& ground, const CountedObjective& f,
                  const CountedIndependence& indep, const KnapsackSet* sacks);

}  // namespace internal
}  // namespace submax

#endif  // SUBMAX_GREEDY_INTERNAL_H_
