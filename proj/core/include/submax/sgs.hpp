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

#ifndef SUBMAX_SGS_H_
#define SUBMAX_SGS_H_

#include <queue>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/independence.hpp"
#include "submax/objective.hpp"
#include "submax/report.hpp"

namespace submax {

// Exchange parameter p of running ell disjoint solutions against a
// k-extendible system (max(k, ell-1)) or a general k-system (k + ell - 1).
int exchange_bound(SystemClass c, int k, int ell);

// Number of disjoint solutions that optimizes the worst-case ratio, given
// the constraint class, its k, and the number m of knapsack constraints.
// Monotone objectives want k+1 solutions (extendible) or a single greedy
// pass (general systems).
int choose_num_solutions(SystemClass c, int k, int m, bool monotone);

// Density-threshold scale beta for the binary search wrappers:
//   2(1-eps) * (1 - 1/ell - eps) / (p + 1 + 2m), or with (1-eps) in place of
//   (1 - 1/ell - eps) when the objective is monotone. Requires ell >= 2 in
//   the non-monotone case (the guarantee is vacuous otherwise).
double choose_density_scale(SystemClass c, int k, int ell, int m, double eps,
                            bool monotone);

// Deterministic max-order on (gain, element, solution): larger gain first,
// then lower element id, then lower solution index. Stored gains are stale
// upper bounds (valid by submodularity, since solutions only grow), so
// entries must be revalidated when popped.
class PairQueue {
 public:
  struct Entry {
    double gain;
    int element;
    int solution;
  };

  static bool ordered_before(const Entry& a, const Entry& b);

  void push(const Entry& e) { heap_.push(e); }
  const Entry& top() const { return heap_.top(); }
  void pop() { heap_.pop(); }
  bool empty() const { return heap_.empty(); }

 private:
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      return ordered_before(b, a);
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
};

// Acceptance trace for structural checks: element, receiving solution, the
// true marginal gain at acceptance time, and the active thresholds (NaN for
// the non-thresholded algorithms).
struct AcceptRecord {
  int element;
  int solution;
  double gain;
  double threshold;  // tau
  double gate;       // max(tau, rho * total cost), when density gating is on
};

struct RunAudit {
  std::vector<AcceptRecord> accepts;
  int rounds = 0;
};

// Grows ell disjoint solutions at once: repeatedly commits the feasible
// (element, solution) pair of maximal positive marginal gain, then returns
// the best of the ell solutions. ell >= 1.
RunReport simultaneous_greedys(const GroundSet& ground, CountedObjective& f,
                               CountedIndependence& indep, int ell,
                               RunAudit* audit = nullptr);

// Descending-threshold variant: tau sweeps from max_u f({u}) down by factors
// of (1-eps) until tau <= (eps/n) * max_u f({u}); within a round, pairs are
// scanned in ascending (element, solution) order and accepted when feasible
// with gain >= tau. eps in (0, 1/2).
RunReport fast_sgs(const GroundSet& ground, CountedObjective& f,
                   CountedIndependence& indep, int ell, double eps,
                   RunAudit* audit = nullptr);

// Thresholded sweep with density gating against knapsack budgets: a pair is
// accepted when feasible, its gain clears max(tau, rho * total cost of the
// element), and every budget stays within 1. The report's
// knapsack_rejected flag records whether a budget check ever failed; the
// final argmax also considers the best feasible singleton.
RunReport knapsack_sgs(const GroundSet& ground, CountedObjective& f,
                       CountedIndependence& indep, const KnapsackSet& sacks,
                       int ell, double rho, double eps,
                       RunAudit* audit = nullptr);

// Binary search over the density threshold rho = beta * max_u f({u}) *
// (1+delta)^i on the integer grid i = 1..ceil(ln(n)/delta), driven by the
// knapsack-rejected flag of each inner knapsack_sgs run; returns the best
// inner result. Pass beta <= 0 to use choose_density_scale defaults
// (non-monotone form).
RunReport density_search_sgs(const GroundSet& ground, CountedObjective& f,
                             CountedIndependence& indep,
                             const KnapsackSet& sacks, int ell, double delta,
                             double eps, double beta = -1.0,
                             RunAudit* audit = nullptr);

}  // namespace submax

#endif  // SUBMAX_SGS_H_
