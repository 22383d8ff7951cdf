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
//
// Naive full-scan counterparts of the lazy production algorithms. They share
// the oracle interface (hence the exact floating-point gains and tie-break
// order) but none of the queue or stale-bound machinery, so agreement with
// them certifies the lazy implementations.

#ifndef SUBMAX_TESTS_SUPPORT_REFERENCE_H_
#define SUBMAX_TESTS_SUPPORT_REFERENCE_H_

#include <vector>

#include "submax/element_set.hpp"
#include "submax/independence.hpp"
#include "submax/objective.hpp"

namespace submax_test {

struct ReferenceRun {
  std::vector<submax::ElementSet> solutions;
  submax::ElementSet best;
  double best_value = 0.0;
  int rounds = 0;
};

// Picks the final answer the same way the production code does: every
// solution revalued from scratch, first-wins argmax.
inline void finish_reference(ReferenceRun& run,
                             const submax::CountedObjective& f) {
  int best = 0;
  std::vector<double> values;
  for (const submax::ElementSet& s : run.solutions) {
    values.push_back(f.inner().value(s));
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = static_cast<int>(i);
  }
  run.best = run.solutions[best];
  run.best_value = values[best];
}

// Eager simultaneous greedy: rescans every (element, solution) pair per
// acceptance; ties resolve to the lowest element id, then lowest solution.
inline ReferenceRun reference_sgs(const submax::GroundSet& ground,
                                  submax::CountedObjective& f,
                                  submax::CountedIndependence& indep,
                                  int ell) {
  const int n = ground.n;
  std::vector<submax::SolutionState> sols;
  for (int j = 0; j < ell; ++j) sols.push_back(f.start(submax::ElementSet{}));
  std::vector<char> assigned(n, 0);

  while (true) {
    double best_gain = 0.0, best_after = 0.0;
    int bu = -1, bj = -1;
    for (int u = 0; u < n; ++u) {
      if (assigned[u]) continue;
      for (int j = 0; j < ell; ++j) {
        if (!indep.can_add(sols[j].members(), u)) continue;
        const double gain = f.gain_add(sols[j], u);
        const double after = sols[j].value() + gain;
        if (gain <= 0.0) continue;
        if (gain > best_gain) {
          best_gain = gain;
          best_after = after;
          bu = u;
          bj = j;
        }
      }
    }
    if (bu < 0) break;
    f.push(sols[bj], bu, best_after);
    assigned[bu] = 1;
  }

  ReferenceRun run;
  for (const submax::SolutionState& s : sols) run.solutions.push_back(s.members());
  finish_reference(run, f);
  return run;
}

// Literal descending-threshold sweep (the m=0, rho=0 case): each round scans
// pairs in ascending (element, solution) order and accepts gains >= tau.
inline ReferenceRun reference_threshold(const submax::GroundSet& ground,
                                        submax::CountedObjective& f,
                                        submax::CountedIndependence& indep,
                                        int ell, double eps) {
  const int n = ground.n;
  ReferenceRun run;
  std::vector<submax::SolutionState> sols;
  for (int j = 0; j < ell; ++j) sols.push_back(f.start(submax::ElementSet{}));

  const double empty_value = sols[0].value();
  double delta_f = 0.0;
  for (int u = 0; u < n; ++u) {
    delta_f = std::max(delta_f, empty_value + f.gain_add(sols[0], u));
  }
  if (delta_f > 0.0) {
    std::vector<char> assigned(n, 0);
    std::vector<char> dead(static_cast<std::size_t>(n) * ell, 0);
    const double floor = eps / n * delta_f;
    double tau = delta_f;
    while (tau > floor) {
      ++run.rounds;
      for (int u = 0; u < n; ++u) {
        if (assigned[u]) continue;
        for (int j = 0; j < ell; ++j) {
          const std::size_t idx = static_cast<std::size_t>(u) * ell + j;
          if (dead[idx]) continue;
          if (!indep.can_add(sols[j].members(), u)) {
            dead[idx] = 1;
            continue;
          }
          const double gain = f.gain_add(sols[j], u);
          const double after = sols[j].value() + gain;
          if (gain <= 0.0) {
            dead[idx] = 1;
            continue;
          }
          if (gain < tau) continue;
          f.push(sols[j], u, after);
          assigned[u] = 1;
          break;
        }
      }
      tau *= 1.0 - eps;
    }
  }

  for (const submax::SolutionState& s : sols) run.solutions.push_back(s.members());
  finish_reference(run, f);
  return run;
}

}  // namespace submax_test

#endif  // SUBMAX_TESTS_SUPPORT_REFERENCE_H_
