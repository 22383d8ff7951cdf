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

#include "submax/repeated.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "greedy_internal.hpp"
#include "submax/rng.hpp"

namespace submax {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("eps must lie in (0, 1/2)");
  }
}

void check_alpha(double alpha) {
  if (!(alpha >= 2.0)) {
    throw std::invalid_argument(
        "alpha must be >= 2 (no unconstrained subroutine does better)");
  }
}

// One thresholded single-solution round over the masked ground set. Fills
// report-shape candidates ("S" prefix for the swept set, the best feasible
// singleton as its own set) and returns the sweep outcome.
internal::SweepOutcome modified_round(const GroundSet& ground,
                                      CountedObjective& f,
                                      CountedIndependence& indep,
                                      const KnapsackSet& sacks, double rho,
                                      double eps,
                                      const std::vector<char>* available,
                                      RunAudit* audit) {
  return internal::threshold_sweep(ground, f, indep, sacks, /*ell=*/1, rho,
                                   eps, /*track_singleton=*/true, available,
                                   audit);
}

// The returned set of one modified-greedy round: the better of the swept
// solution and the best feasible singleton. Both values are already tracked,
// so the pick costs no oracle queries; ties keep the swept solution.
ElementSet modified_round_pick(const internal::SweepOutcome& out) {
  const ElementSet& swept = out.solutions[0].members();
  if (out.best_singleton < 0) return swept;
  if (out.solutions[0].value() >= out.singleton_value[out.best_singleton]) {
    return swept;
  }
  return ElementSet{out.best_singleton};
}

}  // namespace

int choose_num_iterations(int k, int m, double alpha, bool monotone) {
  if (k < 1 || m < 0) {
    throw std::invalid_argument("choose_num_iterations: bad k or m");
  }
  check_alpha(alpha);
  if (monotone) return 1;
  return static_cast<int>(
      std::floor(1.0 + std::sqrt(2.0 * (k + 2.0 * m + 1.0) / alpha)));
}

double choose_rg_density_scale(int k, int ell, int m, double eps, double alpha,
                               bool monotone) {
  if (k < 1 || m < 0 || ell < 1) {
    throw std::invalid_argument("choose_rg_density_scale: bad k, ell or m");
  }
  check_eps(eps);
  check_alpha(alpha);
  double denom = k + 2.0 * m + 1.0 + alpha * (ell - 1.0) / 2.0;
  if (monotone) {
    return 2.0 * (1.0 - eps) * (1.0 - eps) / denom;
  }
  if (ell < 2) {
    throw std::invalid_argument(
        "choose_rg_density_scale: need ell >= 2 unless the objective is "
        "monotone");
  }
  return 2.0 * (1.0 - eps) * (1.0 - 1.0 / ell - eps) / denom;
}

RunReport greedy(const GroundSet& ground, CountedObjective& f,
                 CountedIndependence& indep, RunAudit* audit) {
  internal::validate_run(ground, f, indep, nullptr);
  const auto [v0, i0] = snapshot_counts(f, indep);

  auto solutions =
      internal::exact_multi_greedy(ground, f, indep, /*ell=*/1, nullptr, audit);

  RunReport report;
  report.algorithm = "greedy";
  report.candidates.push_back(
      {"S1", solutions[0].members(), solutions[0].value()});
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

ElementSet usm_double_greedy(const ElementSet& a, CountedObjective& f) {
  if (a.size() == 0) return ElementSet();
  SolutionState x = f.start(ElementSet());
  SolutionState y = f.start(a);
  for (int u : a.members()) {
    double x_plus = f.value_add(x, u);
    double y_minus = f.value_remove(y, u);
    double gain_add = x_plus - x.value();
    double gain_drop = y_minus - y.value();
    if (gain_add >= gain_drop) {
      f.push(x, u, x_plus);
    } else {
      f.pop(y, u, y_minus);
    }
  }
  return x.members();
}

RunReport repeated_greedy(const GroundSet& ground, CountedObjective& f,
                          CountedIndependence& indep, int ell,
                          RunAudit* audit) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  internal::validate_run(ground, f, indep, nullptr);
  const auto [v0, i0] = snapshot_counts(f, indep);

  RunReport report;
  report.algorithm = "repeated-greedy";
  report.params["ell"] = std::to_string(ell);

  std::vector<char> available(ground.n, 1);
  for (int i = 1; i <= ell; ++i) {
    auto solutions = internal::exact_multi_greedy(ground, f, indep, /*ell=*/1,
                                                  &available, audit);
    const ElementSet& round_set = solutions[0].members();
    ElementSet filtered = usm_double_greedy(round_set, f);
    report.candidates.push_back(
        {"S" + std::to_string(i), round_set, solutions[0].value()});
    report.candidates.push_back({"S" + std::to_string(i) + "'", filtered,
                                 f.inner().value(filtered)});
    for (int u : round_set.members()) available[u] = 0;
  }
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

RunReport modified_greedy(const GroundSet& ground, CountedObjective& f,
                          CountedIndependence& indep, const KnapsackSet& sacks,
                          double rho, double eps, RunAudit* audit) {
  internal::validate_run(ground, f, indep, &sacks);
  const auto [v0, i0] = snapshot_counts(f, indep);

  auto out = modified_round(ground, f, indep, sacks, rho, eps, nullptr, audit);

  RunReport report;
  report.algorithm = "modified-greedy";
  report.params["epsilon"] = format_double(eps);
  report.params["rho"] = format_double(rho);
  report.params["rounds"] = std::to_string(out.rounds);
  report.candidates.push_back(
      {"S1", out.solutions[0].members(), out.solutions[0].value()});
  if (out.best_singleton >= 0) {
    report.candidates.push_back({"singleton", ElementSet{out.best_singleton},
                                 out.singleton_value[out.best_singleton]});
  }
  if (sacks.num_knapsacks() > 0) report.knapsack_rejected = out.rejected;
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

RunReport modified_repeated_greedy(const GroundSet& ground,
                                   CountedObjective& f,
                                   CountedIndependence& indep,
                                   const KnapsackSet& sacks, int ell,
                                   double rho, double eps, RunAudit* audit) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  internal::validate_run(ground, f, indep, &sacks);
  const auto [v0, i0] = snapshot_counts(f, indep);

  RunReport report;
  report.algorithm = "modified-repeated-greedy";
  report.params["ell"] = std::to_string(ell);
  report.params["epsilon"] = format_double(eps);
  report.params["rho"] = format_double(rho);

  bool rejected = false;
  std::vector<char> available(ground.n, 1);
  for (int i = 1; i <= ell; ++i) {
    auto out =
        modified_round(ground, f, indep, sacks, rho, eps, &available, audit);
    rejected = rejected || out.rejected;
    // The round's set is the inner routine's own argmax (swept solution or
    // best feasible singleton); that set is filtered and removed.
    ElementSet round_set = modified_round_pick(out);
    ElementSet filtered = usm_double_greedy(round_set, f);
    report.candidates.push_back({"S" + std::to_string(i), round_set,
                                 f.inner().value(round_set)});
    report.candidates.push_back({"S" + std::to_string(i) + "'", filtered,
                                 f.inner().value(filtered)});
    for (int u : round_set.members()) available[u] = 0;
  }
  if (sacks.num_knapsacks() > 0) report.knapsack_rejected = rejected;
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

RunReport density_search_rg(const GroundSet& ground, CountedObjective& f,
                            CountedIndependence& indep,
                            const KnapsackSet& sacks, int ell, double delta,
                            double eps, double beta, double alpha,
                            RunAudit* audit) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("delta must lie in (0, 1/2)");
  }
  check_eps(eps);
  check_alpha(alpha);
  internal::validate_run(ground, f, indep, &sacks);
  if (ground.n < 1) throw std::invalid_argument("empty ground set");
  const auto [v0, i0] = snapshot_counts(f, indep);

  if (beta <= 0.0) {
    beta = choose_rg_density_scale(indep.declared_k(), ell,
                                   sacks.num_knapsacks(), eps, alpha,
                                   /*monotone=*/false);
  }
  const auto [delta_f, delta_arg] = max_singleton(f, ground);
  (void)delta_arg;

  const int grid_upper = static_cast<int>(
      std::ceil(std::log(static_cast<double>(ground.n)) / delta));
  int lo = 1, hi = grid_upper;
  bool any_rejected = false;
  int inner_calls = 0;

  RunReport report;
  report.algorithm = "density-search-rg";

  auto run_inner = [&](int grid_point) {
    double rho = beta * delta_f * std::pow(1.0 + delta, grid_point);
    RunReport inner = modified_repeated_greedy(ground, f, indep, sacks, ell,
                                               rho, eps, audit);
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
  report.params["alpha"] = format_double(alpha);
  report.params["grid_upper"] = std::to_string(grid_upper);
  report.params["inner_calls"] = std::to_string(inner_calls);
  if (sacks.num_knapsacks() > 0) report.knapsack_rejected = any_rejected;
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

RunReport sample_greedy(const GroundSet& ground, CountedObjective& f,
                        CountedIndependence& indep, int k, std::uint64_t seed,
                        double probability, RunAudit* audit) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (probability > 1.0) {
    throw std::invalid_argument("sampling probability must be <= 1");
  }
  internal::validate_run(ground, f, indep, nullptr);
  const auto [v0, i0] = snapshot_counts(f, indep);

  const double p = probability > 0.0 ? probability : 1.0 / (k + 1.0);
  SplitMix64 rng(seed);
  std::vector<char> available(ground.n, 0);
  for (int u = 0; u < ground.n; ++u) available[u] = rng.bernoulli(p) ? 1 : 0;

  auto solutions = internal::exact_multi_greedy(ground, f, indep, /*ell=*/1,
                                                &available, audit);

  RunReport report;
  report.algorithm = "sample-greedy";
  report.params["k"] = std::to_string(k);
  report.params["seed"] = std::to_string(seed);
  report.params["p"] = format_double(p);
  report.candidates.push_back(
      {"S1", solutions[0].members(), solutions[0].value()});
  internal::finish_report(report, f, indep, v0, i0);
  return report;
}

}  // namespace submax
