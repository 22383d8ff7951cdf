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

#include "submax/sgs.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "greedy_internal.hpp"

namespace submax {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

size_t pair_index(int u, int ell, int j) {
  return static_cast<size_t>(u) * ell + j;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("eps must lie in (0, 1/2)");
  }
}

int pick_best(const std::vector<Candidate>& candidates) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(candidates.size()); ++i) {
    if (candidates[i].value > candidates[best].value) best = i;
  }
  return best;
}

std::vector<Candidate> solution_candidates(
    const std::vector<SolutionState>& solutions) {
  std::vector<Candidate> candidates;
  candidates.reserve(solutions.size());
  for (size_t j = 0; j < solutions.size(); ++j) {
    candidates.push_back({"S" + std::to_string(j + 1), solutions[j].members(),
                          solutions[j].value()});
  }
  return candidates;
}

}  // namespace

int exchange_bound(SystemClass c, int k, int ell) {
  if (k < 1 || ell < 1) {
    throw std::invalid_argument("exchange_bound: k and ell must be >= 1");
  }
  return c == SystemClass::kExtendible ? std::max(k, ell - 1) : k + ell - 1;
}

int choose_num_solutions(SystemClass c, int k, int m, bool monotone) {
  if (k < 1 || m < 0) {
    throw std::invalid_argument("choose_num_solutions: bad k or m");
  }
  if (monotone) {
    return c == SystemClass::kExtendible ? k + 1 : 1;
  }
  if (c == SystemClass::kExtendible) {
    int big = std::max(static_cast<int>(std::ceil(std::sqrt(1.0 + 2.0 * m))), k);
    return big + 1;
  }
  return static_cast<int>(std::floor(2.0 + std::sqrt(k + 2.0 * m + 2.0)));
}

double choose_density_scale(SystemClass c, int k, int ell, int m, double eps,
                            bool monotone) {
  check_eps(eps);
  if (m < 0) throw std::invalid_argument("choose_density_scale: m < 0");
  int p = exchange_bound(c, k, ell);
  double denom = p + 1.0 + 2.0 * m;
  if (monotone) {
    return 2.0 * (1.0 - eps) * (1.0 - eps) / denom;
  }
  if (ell < 2) {
    throw std::invalid_argument(
        "choose_density_scale: need ell >= 2 unless the objective is "
        "monotone");
  }
  return 2.0 * (1.0 - eps) * (1.0 - 1.0 / ell - eps) / denom;
}

bool PairQueue::ordered_before(const Entry& a, const Entry& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.element != b.element) return a.element < b.element;
  return a.solution < b.solution;
}

namespace internal {

void validate_run(const GroundSet& ground, const CountedObjective& f,
                  const CountedIndependence& indep, const KnapsackSet* sacks) {
  if (ground.n < 0) throw std::invalid_argument("negative ground size");
  if (f.ground_size() != ground.n || indep.ground_size() != ground.n) {
    throw std::invalid_argument("objective/constraint ground size mismatch");
  }
  if (sacks && sacks->num_knapsacks() > 0 && sacks->ground_size() != ground.n) {
    throw std::invalid_argument("knapsack ground size mismatch");
  }
}

void finish_report(RunReport& report, CountedObjective& f,
                   CountedIndependence& indep, std::int64_t value_calls_before,
                   std::int64_t indep_calls_before) {
  report.value_calls = f.calls() - value_calls_before;
  report.independence_calls = indep.calls() - indep_calls_before;
  // Recompute every candidate on the raw objective so the final argmax and
  // the reported value are exact even after long incremental runs. These
  // evaluations are bookkeeping, not part of the algorithm, and stay outside
  // the call counters.
  for (Candidate& c : report.candidates) {
    c.value = f.inner().value(c.set);
  }
  int best = pick_best(report.candidates);
  report.solution = report.candidates[best].set;
  report.value = report.candidates[best].value;
}

std::vector<SolutionState> exact_multi_greedy(
    const GroundSet& ground, CountedObjective& f, CountedIndependence& indep,
    int ell, const std::vector<char>* available, RunAudit* audit) {
  const int n = ground.n;
  std::vector<SolutionState> solutions;
  solutions.reserve(ell);
  solutions.push_back(f.start(ElementSet()));
  for (int j = 1; j < ell; ++j) solutions.push_back(f.start_like(solutions[0]));
  const double empty_value = solutions[0].value();

  std::vector<char> assigned(n, 0);
  std::vector<char> dead(static_cast<size_t>(n) * ell, 0);
  // Last validated gain and value per pair, tagged with the solution version
  // they were computed against. A pair whose tag is current needs no oracle
  // call when popped.
  std::vector<double> seen_gain(static_cast<size_t>(n) * ell, 0.0);
  std::vector<double> seen_value(static_cast<size_t>(n) * ell, 0.0);
  std::vector<int> seen_version(static_cast<size_t>(n) * ell, -1);
  std::vector<int> version(ell, 0);

  PairQueue queue;
  for (int u = 0; u < n; ++u) {
    if (available && !(*available)[u]) continue;
    if (!indep.can_add(solutions[0].members(), u)) continue;
    double gain = f.gain_add(solutions[0], u);
    double val = empty_value + gain;
    if (gain <= 0.0) continue;
    for (int j = 0; j < ell; ++j) {
      size_t idx = pair_index(u, ell, j);
      seen_gain[idx] = gain;
      seen_value[idx] = val;
      seen_version[idx] = 0;
      queue.push({gain, u, j});
    }
  }

  while (!queue.empty()) {
    PairQueue::Entry entry = queue.top();
    queue.pop();
    const int u = entry.element, j = entry.solution;
    const size_t idx = pair_index(u, ell, j);
    if (assigned[u] || dead[idx]) continue;

    double gain, val;
    if (seen_version[idx] == version[j]) {
      // Validated against the current solution already; popping it as the
      // queue maximum makes it the true best pair.
      gain = seen_gain[idx];
      val = seen_value[idx];
    } else {
      if (!indep.can_add(solutions[j].members(), u)) {
        dead[idx] = 1;  // down-closed: infeasible for j forever
        continue;
      }
      gain = f.gain_add(solutions[j], u);
      val = solutions[j].value() + gain;
      seen_gain[idx] = gain;
      seen_value[idx] = val;
      seen_version[idx] = version[j];
      if (gain <= 0.0) {
        dead[idx] = 1;  // submodularity: the gain can only shrink further
        continue;
      }
      PairQueue::Entry fresh{gain, u, j};
      if (!queue.empty() && PairQueue::ordered_before(queue.top(), fresh)) {
        queue.push(fresh);
        continue;
      }
    }

    f.push(solutions[j], u, val);
    assigned[u] = 1;
    ++version[j];
    if (audit) audit->accepts.push_back({u, j, gain, kNaN, kNaN});
  }
  return solutions;
}

SweepOutcome threshold_sweep(const GroundSet& ground, CountedObjective& f,
                             CountedIndependence& indep,
                             const KnapsackSet& sacks, int ell, double rho,
                             double eps, bool track_singleton,
                             const std::vector<char>* available,
                             RunAudit* audit) {
  check_eps(eps);
  if (rho < 0.0) throw std::invalid_argument("rho must be >= 0");
  const int n = ground.n;
  const int m = sacks.num_knapsacks();

  SweepOutcome out;
  out.solutions.push_back(f.start(ElementSet()));
  for (int j = 1; j < ell; ++j) {
    out.solutions.push_back(f.start_like(out.solutions[0]));
  }
  out.empty_value = out.solutions[0].value();

  std::vector<char> assigned(n, 0);
  out.singleton_value.assign(n, kNaN);
  std::vector<double> singleton_gain(n, 0.0);
  std::vector<double> total_cost(n, 0.0);
  double best_single = 0.0;
  int delta_arg = -1;
  int n_avail = 0;
  for (int u = 0; u < n; ++u) {
    if (available && !(*available)[u]) {
      assigned[u] = 1;  // outside the working ground set
      continue;
    }
    ++n_avail;
    double g = f.gain_add(out.solutions[0], u);
    double v = out.empty_value + g;
    singleton_gain[u] = g;
    out.singleton_value[u] = v;
    if (delta_arg < 0 || v > out.delta_f) {
      out.delta_f = v;
      delta_arg = u;
    }
    if (m > 0) total_cost[u] = sacks.total_cost(u);
    if (track_singleton && (out.best_singleton < 0 || v > best_single) &&
        sacks.singleton_feasible(u) &&
        indep.can_add(out.solutions[0].members(), u)) {
      best_single = v;
      out.best_singleton = u;
    }
  }
  if (delta_arg < 0) {
    if (audit) audit->rounds = 0;
    return out;
  }

  // Stale upper bounds on marginal gains, valid by submodularity. A pair is
  // only re-queried when its bound still clears the current gate, which is
  // what keeps each round cheap without changing any acceptance decision.
  std::vector<double> stale(static_cast<size_t>(n) * ell, 0.0);
  std::vector<char> dead(static_cast<size_t>(n) * ell, 0);
  for (int u = 0; u < n; ++u) {
    if (assigned[u]) continue;
    for (int j = 0; j < ell; ++j) {
      stale[pair_index(u, ell, j)] = singleton_gain[u];
    }
  }
  std::vector<std::vector<double>> totals(ell, std::vector<double>(std::max(m, 1), 0.0));

  // The floor is relative to the size of the working ground set, which may
  // be smaller than the container when a mask is active.
  double tau = out.delta_f;
  const double tau_floor = eps / n_avail * out.delta_f;
  while (tau > tau_floor) {
    ++out.rounds;
    for (int u = 0; u < n; ++u) {
      if (assigned[u]) continue;
      const double gate = std::max(tau, rho * total_cost[u]);
      for (int j = 0; j < ell; ++j) {
        const size_t idx = pair_index(u, ell, j);
        if (dead[idx]) continue;
        if (stale[idx] < gate) continue;
        if (!indep.can_add(out.solutions[j].members(), u)) {
          dead[idx] = 1;
          continue;
        }
        double gain = f.gain_add(out.solutions[j], u);
        double val = out.solutions[j].value() + gain;
        stale[idx] = gain;
        if (gain <= 0.0) {
          dead[idx] = 1;
          continue;
        }
        if (gain < gate) continue;
        if (m > 0 && !knapsack_can_add(sacks, totals[j], u)) {
          out.rejected = true;
          dead[idx] = 1;  // budgets only fill up
          continue;
        }
        f.push(out.solutions[j], u, val);
        assigned[u] = 1;
        for (int r = 0; r < m; ++r) totals[j][r] += sacks.cost(r, u);
        if (audit) audit->accepts.push_back({u, j, gain, tau, gate});
        break;
      }
    }
    tau *= 1.0 - eps;
  }
  if (audit) audit->rounds = out.rounds;
  return out;
}

}  // namespace internal

RunReport simultaneous_greedys(const GroundSet& ground, CountedObjective& f,
                               CountedIndependence& indep, int ell,
                               RunAudit* audit) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  internal::validate_run(ground, f, indep, nullptr);
  const auto [v0, i0] = snapshot_counts(f, indep);

  auto solutions = internal::exact_multi_greedy(ground, f, indep, ell,
                                                nullptr, audit);

  RunReport report;
  report.algorithm = "simultaneous-greedys";
  report.params["ell"] = std::to_string(ell);
  report.candidates = solution_candidates(solutions);
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

RunReport fast_sgs(const GroundSet& ground, CountedObjective& f,
                   CountedIndependence& indep, int ell, double eps,
                   RunAudit* audit) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  internal::validate_run(ground, f, indep, nullptr);
  const auto [v0, i0] = snapshot_counts(f, indep);

  KnapsackSet no_sacks;
  auto out = internal::threshold_sweep(ground, f, indep, no_sacks, ell,
                                       /*rho=*/0.0, eps,
                                       /*track_singleton=*/false, nullptr,
                                       audit);

  RunReport report;
  report.algorithm = "fast-sgs";
  report.params["ell"] = std::to_string(ell);
  report.params["epsilon"] = format_double(eps);
  report.params["rounds"] = std::to_string(out.rounds);
  report.candidates = solution_candidates(out.solutions);
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

RunReport knapsack_sgs(const GroundSet& ground, CountedObjective& f,
                       CountedIndependence& indep, const KnapsackSet& sacks,
                       int ell, double rho, double eps, RunAudit* audit) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  internal::validate_run(ground, f, indep, &sacks);
  const auto [v0, i0] = snapshot_counts(f, indep);

  auto out = internal::threshold_sweep(ground, f, indep, sacks, ell, rho, eps,
                                       /*track_singleton=*/true, nullptr,
                                       audit);

  RunReport report;
  report.algorithm = "knapsack-sgs";
  report.params["ell"] = std::to_string(ell);
  report.params["epsilon"] = format_double(eps);
  report.params["rho"] = format_double(rho);
  report.params["rounds"] = std::to_string(out.rounds);
  report.candidates = solution_candidates(out.solutions);
  if (out.best_singleton >= 0) {
    report.candidates.push_back({"singleton",
                                 ElementSet{out.best_singleton},
                                 out.singleton_value[out.best_singleton]});
  }
  if (sacks.num_knapsacks() > 0) report.knapsack_rejected = out.rejected;
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

RunReport density_search_sgs(const GroundSet& ground, CountedObjective& f,
                             CountedIndependence& indep,
                             const KnapsackSet& sacks, int ell, double delta,
                             double eps, double beta, RunAudit* audit) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("delta must lie in (0, 1/2)");
  }
  check_eps(eps);
  internal::validate_run(ground, f, indep, &sacks);
  if (ground.n < 1) throw std::invalid_argument("empty ground set");
  const auto [v0, i0] = snapshot_counts(f, indep);

  if (beta <= 0.0) {
    beta = choose_density_scale(indep.declared_class(), indep.declared_k(),
                                ell, sacks.num_knapsacks(), eps,
                                /*monotone=*/false);
  }
  const auto [delta_f, delta_arg] = max_singleton(f, ground);
  (void)delta_arg;

  const int grid_upper =
      static_cast<int>(std::ceil(std::log(static_cast<double>(ground.n)) / delta));
  int lo = 1, hi = grid_upper;
  bool any_rejected = false;
  int inner_calls = 0;

  RunReport report;
  report.algorithm = "density-search-sgs";

  auto run_inner = [&](int grid_point) {
    double rho = beta * delta_f * std::pow(1.0 + delta, grid_point);
    RunReport inner = knapsack_sgs(ground, f, indep, sacks, ell, rho, eps,
                                   audit);
    ++inner_calls;
    any_rejected = any_rejected || inner.knapsack_rejected.value_or(false);
    report.candidates.push_back({"rho=" + format_double(rho), inner.solution,
                                 inner.value});
    return inner;
  };

  while (std::abs(hi - lo) > 1) {
    int mid = (lo + hi + 1) / 2;
    RunReport inner = run_inner(mid);
    if (inner.knapsack_rejected.value_or(false)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  run_inner(lo);

  report.params["ell"] = std::to_string(ell);
  report.params["epsilon"] = format_double(eps);
  report.params["delta"] = format_double(delta);
  report.params["beta"] = format_double(beta);
  report.params["grid_upper"] = std::to_string(grid_upper);
  report.params["inner_calls"] = std::to_string(inner_calls);
  if (sacks.num_knapsacks() > 0) report.knapsack_rejected = any_rejected;
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

}  // namespace submax
