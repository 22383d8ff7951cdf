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

#ifndef SUBMAX_REPEATED_H_
#define SUBMAX_REPEATED_H_

#include <cstdint>

#include "submax/constraints.hpp"
#include "submax/independence.hpp"
#include "submax/objective.hpp"
#include "submax/report.hpp"
#include "submax/sgs.hpp"

namespace submax {

// Approximation constant of the shipped deterministic unconstrained
// maximizer (usm_double_greedy). Values below 2 are impossible for any
// unconstrained subroutine, so the iteration choosers reject them.
inline constexpr double kUsmAlpha = 3.0;

// Number of greedy+filter rounds that optimizes the worst-case ratio of the
// repeated variants: floor(1 + sqrt(2(k + 2m + 1) / alpha)). A monotone
// objective wants a single plain greedy round.
int choose_num_iterations(int k, int m, double alpha, bool monotone);

// Density-threshold scale for density_search_rg:
//   2(1-eps)(1 - 1/ell - eps) / (k + 2m + 1 + alpha(ell-1)/2),
// with (1-eps) in place of (1 - 1/ell - eps) when the objective is
// monotone. Requires ell >= 2 in the non-monotone case.
double choose_rg_density_scale(int k, int ell, int m, double eps, double alpha,
                               bool monotone);

// Classic greedy: repeatedly add the feasible element of maximal strictly
// positive marginal gain (lazy queue, deterministic tie-break).
RunReport greedy(const GroundSet& ground, CountedObjective& f,
                 CountedIndependence& indep, RunAudit* audit = nullptr);

// Deterministic unconstrained double greedy over the elements of `a` in
// ascending id: maintain X = {}, Y = a; add u to X when
// f(u | X) >= f(Y - u) - f(Y), else drop u from Y. Returns X (= Y), which
// attains at least a third of the best subset of `a` for non-negative
// submodular f. Its queries hit the shared call counter.
ElementSet usm_double_greedy(const ElementSet& a, CountedObjective& f);

// ell rounds of (greedy on the remaining ground set, unconstrained filter,
// remove the greedy set); returns the best of the 2*ell produced sets.
RunReport repeated_greedy(const GroundSet& ground, CountedObjective& f,
                          CountedIndependence& indep, int ell,
                          RunAudit* audit = nullptr);

// Single-solution descending-threshold sweep with the density gate
// (gain >= max(tau, rho * total cost)) and the knapsack budget gate;
// returns the better of the swept solution and the best feasible singleton.
// The report's knapsack_rejected flag is sticky across the run.
RunReport modified_greedy(const GroundSet& ground, CountedObjective& f,
                          CountedIndependence& indep, const KnapsackSet& sacks,
                          double rho, double eps, RunAudit* audit = nullptr);

// repeated_greedy with the thresholded knapsack-aware sweep as the inner
// routine; knapsack_rejected is the OR of the per-round flags.
RunReport modified_repeated_greedy(const GroundSet& ground,
                                   CountedObjective& f,
                                   CountedIndependence& indep,
                                   const KnapsackSet& sacks, int ell,
                                   double rho, double eps,
                                   RunAudit* audit = nullptr);

// Binary search over rho = beta * max_u f({u}) * (1+delta)^i with
// modified_repeated_greedy as the inner routine, driven by its
// knapsack-rejected flag; returns the best inner result. Pass beta <= 0 to
// use choose_rg_density_scale defaults (non-monotone form).
RunReport density_search_rg(const GroundSet& ground, CountedObjective& f,
                            CountedIndependence& indep,
                            const KnapsackSet& sacks, int ell, double delta,
                            double eps, double beta = -1.0,
                            double alpha = kUsmAlpha,
                            RunAudit* audit = nullptr);

// Keeps each element independently with probability 1/(k+1) (SplitMix64
// stream seeded by `seed`), then runs greedy on the sample. `probability`
// in (0, 1] overrides the sampling rate; 1 reproduces plain greedy.
RunReport sample_greedy(const GroundSet& ground, CountedObjective& f,
                        CountedIndependence& indep, int k, std::uint64_t seed,
                        double probability = -1.0, RunAudit* audit = nullptr);

}  // namespace submax

#endif  // SUBMAX_REPEATED_H_
