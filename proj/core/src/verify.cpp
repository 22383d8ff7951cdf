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

#include "submax/verify.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "submax/repeated.hpp"
#include "submax/rng.hpp"
#include "submax/sgs.hpp"

namespace submax {

namespace {

constexpr double kTol = 1e-9;
constexpr double kHarnessEps = 0.1;
constexpr double kHarnessDelta = 0.25;

void check_enumeration_size(int n, int cap, const char* what) {
  if (n < 0 || n > cap) {
    throw std::invalid_argument(std::string(what) + ": ground size " +
                                std::to_string(n) + " exceeds the cap of " +
                                std::to_string(cap));
  }
}

ElementSet set_from_mask(std::uint32_t mask, int n) {
  std::vector<int> ids;
  for (int u = 0; u < n; ++u) {
    if (mask >> u & 1u) ids.push_back(u);
  }
  return ElementSet(std::move(ids));
}

// Independence of every subset, indexed by bitmask.
std::vector<char> independence_table(const IndependenceSystem& indep, int n) {
  std::vector<char> table(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = indep.is_independent(set_from_mask(mask, n)) ? 1 : 0;
  }
  return table;
}

// f of every subset, indexed by bitmask.
std::vector<double> value_table(const Objective& f, int n) {
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.value(set_from_mask(mask, n));
  }
  return table;
}

}  // namespace

bool knapsack_feasible(const KnapsackSet& sacks, const ElementSet& s) {
  for (int r = 0; r < sacks.num_knapsacks(); ++r) {
    double total = 0.0;
    for (int u : s) total += sacks.cost(r, u);
    if (total > 1.0 + kKnapsackTolerance) return false;
  }
  return true;
}

BruteForceResult brute_force_opt(const GroundSet& ground, const Objective& f,
                                 const IndependenceSystem& indep,
                                 const KnapsackSet& sacks) {
  check_enumeration_size(ground.n, 20, "brute_force_opt");
  if (f.ground_size() != ground.n || indep.ground_size() != ground.n) {
    throw std::invalid_argument("brute_force_opt: ground size mismatch");
  }
  const int n = ground.n;
  const int m = sacks.num_knapsacks();

  BruteForceResult best;
  bool have = false;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ElementSet s = set_from_mask(static_cast<std::uint32_t>(mask), n);
    if (!indep.is_independent(s)) continue;
    if (m > 0 && !knapsack_feasible(sacks, s)) continue;
    ++best.feasible_count;
    double v = f.value(s);
    if (!have || v > best.opt_value ||
        (v == best.opt_value && lex_less(s, best.opt_set))) {
      best.opt_set = std::move(s);
      best.opt_value = v;
      have = true;
    }
  }
  return best;
}

bool check_extendible(const IndependenceSystem& indep, const GroundSet& ground,
                      int k) {
  check_enumeration_size(ground.n, 10, "check_extendible");
  if (k < 1) throw std::invalid_argument("check_extendible: k must be >= 1");
  const int n = ground.n;
  const auto ind = independence_table(indep, n);
  const std::uint32_t full = static_cast<std::uint32_t>(ind.size() - 1);

  for (std::uint32_t b = 0; b <= full; ++b) {
    if (!ind[b]) continue;
    // All A subseteq B, iterated as submasks (including B and the empty set).
    std::uint32_t a = b;
    while (true) {
      if (ind[a]) {
        for (int u = 0; u < n; ++u) {
          const std::uint32_t bit = 1u << u;
          if (b & bit) continue;
          if (!ind[a | bit]) continue;
          // Need Y subseteq B \ A with |Y| <= k and (B \ Y) + u independent.
          const std::uint32_t diff = b & ~a;
          bool found = false;
          std::uint32_t y = diff;
          while (true) {
            if (std::popcount(y) <= k && ind[(b & ~y) | bit]) {
              found = true;
              break;
            }
            if (y == 0) break;
            y = (y - 1) & diff;
          }
          if (!found) return false;
        }
      }
      if (a == 0) break;
      a = (a - 1) & b;
    }
  }
  return true;
}

bool check_k_system(const IndependenceSystem& indep, const GroundSet& ground,
                    int k) {
  check_enumeration_size(ground.n, 10, "check_k_system");
  if (k < 1) throw std::invalid_argument("check_k_system: k must be >= 1");
  const int n = ground.n;
  const auto ind = independence_table(indep, n);
  if (!ind[0]) return false;  // a valid system always contains the empty set
  const std::uint32_t full = static_cast<std::uint32_t>(ind.size() - 1);

  for (std::uint32_t b = 0; b <= full; ++b) {
    int min_base = n + 1, max_base = -1;
    std::uint32_t s = b;
    while (true) {
      if (ind[s]) {
        bool maximal = true;
        std::uint32_t outside = b & ~s;
        for (int u = 0; u < n && maximal; ++u) {
          if ((outside >> u & 1u) && ind[s | (1u << u)]) maximal = false;
        }
        if (maximal) {
          int size = std::popcount(s);
          min_base = std::min(min_base, size);
          max_base = std::max(max_base, size);
        }
      }
      if (s == 0) break;
      s = (s - 1) & b;
    }
    if (max_base > k * min_base) return false;
  }
  return true;
}

bool check_submodular(const Objective& f, const GroundSet& ground) {
  check_enumeration_size(ground.n, 10, "check_submodular");
  const int n = ground.n;
  const auto vals = value_table(f, n);
  const std::uint32_t full = static_cast<std::uint32_t>(vals.size() - 1);

  for (std::uint32_t b = 0; b <= full; ++b) {
    std::uint32_t a = b;
    while (true) {
      for (int u = 0; u < n; ++u) {
        const std::uint32_t bit = 1u << u;
        if (b & bit) continue;
        double small_gain = vals[a | bit] - vals[a];
        double large_gain = vals[b | bit] - vals[b];
        if (small_gain < large_gain - kTol) return false;
      }
      if (a == 0) break;
      a = (a - 1) & b;
    }
  }
  return true;
}

bool check_monotone(const Objective& f, const GroundSet& ground) {
  check_enumeration_size(ground.n, 10, "check_monotone");
  const int n = ground.n;
  const auto vals = value_table(f, n);
  const std::uint32_t full = static_cast<std::uint32_t>(vals.size() - 1);

  for (std::uint32_t a = 0; a <= full; ++a) {
    for (int u = 0; u < n; ++u) {
      const std::uint32_t bit = 1u << u;
      if (a & bit) continue;
      if (vals[a | bit] < vals[a] - kTol) return false;
    }
  }
  return true;
}

std::vector<HarnessRow> ratio_harness(
    const std::vector<HarnessAlgo>& algorithms,
    const std::function<Instance(std::uint64_t)>& generate, int trials,
    std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("ratio_harness: trials < 1");
  std::vector<HarnessRow> rows;
  rows.reserve(static_cast<std::size_t>(trials) * algorithms.size());
  for (int t = 0; t < trials; ++t) {
    Instance inst = generate(derive_seed(seed, static_cast<std::uint64_t>(t)));
    BruteForceResult opt = brute_force_opt(inst.ground, *inst.objective,
                                           *inst.constraint, inst.knapsacks);
    for (const HarnessAlgo& algo : algorithms) {
      CountedObjective f(inst.objective);
      CountedIndependence indep(inst.constraint);
      RunReport report = algo.run(inst, f, indep);
      HarnessRow row;
      row.instance = inst.label;
      row.algorithm = algo.name;
      row.value = report.value;
      row.opt = opt.opt_value;
      row.ratio = opt.opt_value > 0.0 ? report.value / opt.opt_value : 1.0;
      row.calls = report.value_calls + report.independence_calls;
      row.bound = algo.bound(inst, opt.opt_value, report);
      row.pass = report.value >= row.bound - kTol;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_harness_csv(std::ostream& out, const std::vector<HarnessRow>& rows) {
  out << "instance,algorithm,value,opt,ratio,calls,bound,pass\n";
  for (const HarnessRow& r : rows) {
    out << r.instance << ',' << r.algorithm << ',' << format_double(r.value)
        << ',' << format_double(r.opt) << ',' << format_double(r.ratio) << ','
        << r.calls << ',' << format_double(r.bound) << ','
        << (r.pass ? 1 : 0) << '\n';
  }
}

namespace {

Instance extendible_pool(std::uint64_t seed) {
  SplitMix64 g(derive_seed(seed, 0x0e11));
  auto objective = static_cast<ObjectiveKind>(g.uniform_int(0, 2));
  int n = g.uniform_int(8, 12);
  return random_instance(seed, n, objective,
                         ConstraintKind::kPartitionIntersection, 0);
}

Instance system_pool(std::uint64_t seed) {
  SplitMix64 g(derive_seed(seed, 0x0e12));
  auto objective = static_cast<ObjectiveKind>(g.uniform_int(0, 2));
  const ConstraintKind kinds[] = {
      ConstraintKind::kInterval, ConstraintKind::kHardness,
      ConstraintKind::kCardinality, ConstraintKind::kPartitionIntersection};
  auto constraint = kinds[g.uniform_int(0, 3)];
  int n = g.uniform_int(8, 12);
  return random_instance(seed, n, objective, constraint, 0);
}

Instance knapsack_pool(std::uint64_t seed) {
  SplitMix64 g(derive_seed(seed, 0x0e13));
  auto objective = static_cast<ObjectiveKind>(g.uniform_int(0, 2));
  const ConstraintKind kinds[] = {ConstraintKind::kCardinality,
                                  ConstraintKind::kPartitionIntersection,
                                  ConstraintKind::kInterval};
  auto constraint = kinds[g.uniform_int(0, 2)];
  int n = g.uniform_int(7, 10);
  int m = g.uniform_int(1, 2);
  return random_instance(seed, n, objective, constraint, m);
}

Instance monotone_pool(std::uint64_t seed) {
  SplitMix64 g(derive_seed(seed, 0x0e14));
  const ConstraintKind kinds[] = {
      ConstraintKind::kCardinality, ConstraintKind::kPartitionIntersection,
      ConstraintKind::kInterval, ConstraintKind::kHardness};
  auto constraint = kinds[g.uniform_int(0, 3)];
  int n = g.uniform_int(8, 12);
  return random_instance(seed, n, ObjectiveKind::kCoverage, constraint, 0);
}

int knapsack_ell(const Instance& inst) {
  return choose_num_solutions(inst.constraint->declared_class(),
                              inst.constraint->declared_k(),
                              inst.knapsacks.num_knapsacks(),
                              /*monotone=*/false);
}

int rg_ell(const Instance& inst) {
  return choose_num_iterations(inst.constraint->declared_k(),
                               inst.knapsacks.num_knapsacks(), kUsmAlpha,
                               /*monotone=*/false);
}

}  // namespace

std::vector<HarnessSuite> standard_suites() {
  std::vector<HarnessSuite> suites;
  const double eps = kHarnessEps;
  const double delta = kHarnessDelta;
  const double density_grid[] = {0.0, 0.35, 1.25};

  {
    HarnessSuite s;
    s.name = "sgs-extendible";
    s.generate = extendible_pool;
    HarnessAlgo a;
    a.name = "simultaneous-greedys";
    a.run = [](const Instance& inst, CountedObjective& f,
               CountedIndependence& indep) {
      return simultaneous_greedys(inst.ground, f, indep,
                                  indep.declared_k() + 1);
    };
    a.bound = [](const Instance& inst, double opt, const RunReport&) {
      double k = inst.constraint->declared_k();
      return k / ((k + 1.0) * (k + 1.0)) * opt;
    };
    s.algorithms.push_back(std::move(a));
    suites.push_back(std::move(s));
  }

  {
    HarnessSuite s;
    s.name = "sgs-system";
    s.generate = system_pool;
    HarnessAlgo a;
    a.name = "simultaneous-greedys";
    a.run = [](const Instance& inst, CountedObjective& f,
               CountedIndependence& indep) {
      int ell = choose_num_solutions(SystemClass::kSystem, indep.declared_k(),
                                     0, /*monotone=*/false);
      return simultaneous_greedys(inst.ground, f, indep, ell);
    };
    a.bound = [](const Instance& inst, double opt, const RunReport&) {
      double root = 1.0 + std::sqrt(inst.constraint->declared_k() + 2.0);
      return opt / (root * root);
    };
    s.algorithms.push_back(std::move(a));
    suites.push_back(std::move(s));
  }

  {
    HarnessSuite s;
    s.name = "sgs-monotone";
    s.generate = monotone_pool;
    HarnessAlgo a;
    a.name = "simultaneous-greedys";
    a.run = [](const Instance& inst, CountedObjective& f,
               CountedIndependence& indep) {
      int ell = choose_num_solutions(indep.declared_class(),
                                     indep.declared_k(), 0, /*monotone=*/true);
      return simultaneous_greedys(inst.ground, f, indep, ell);
    };
    a.bound = [](const Instance& inst, double opt, const RunReport&) {
      return opt / (inst.constraint->declared_k() + 1.0);
    };
    s.algorithms.push_back(std::move(a));
    suites.push_back(std::move(s));
  }

  {
    HarnessSuite s;
    s.name = "knapsack-sgs";
    s.generate = knapsack_pool;
    for (double rho : density_grid) {
      HarnessAlgo a;
      a.name = "knapsack-sgs[rho=" + format_double(rho) + "]";
      a.run = [rho, eps](const Instance& inst, CountedObjective& f,
                         CountedIndependence& indep) {
        return knapsack_sgs(inst.ground, f, indep, inst.knapsacks,
                            knapsack_ell(inst), rho, eps);
      };
      a.bound = [rho, eps](const Instance& inst, double opt,
                           const RunReport& report) {
        if (report.knapsack_rejected.value_or(false)) return rho / 2.0;
        int ell = knapsack_ell(inst);
        int p = exchange_bound(inst.constraint->declared_class(),
                               inst.constraint->declared_k(), ell);
        int m = inst.knapsacks.num_knapsacks();
        return (1.0 - eps) / (p + 1.0) *
               ((1.0 - 1.0 / ell - eps) * opt - m * rho);
      };
      s.algorithms.push_back(std::move(a));
    }
    suites.push_back(std::move(s));
  }

  {
    HarnessSuite s;
    s.name = "density-search-sgs";
    s.generate = knapsack_pool;
    HarnessAlgo a;
    a.name = "density-search-sgs";
    a.run = [eps, delta](const Instance& inst, CountedObjective& f,
                         CountedIndependence& indep) {
      return density_search_sgs(inst.ground, f, indep, inst.knapsacks,
                                knapsack_ell(inst), delta, eps);
    };
    a.bound = [eps, delta](const Instance& inst, double opt,
                           const RunReport&) {
      int ell = knapsack_ell(inst);
      int p = exchange_bound(inst.constraint->declared_class(),
                             inst.constraint->declared_k(), ell);
      int m = inst.knapsacks.num_knapsacks();
      double shrink = (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
      return (1.0 - delta) * shrink * (1.0 - 1.0 / ell) / (p + 1.0 + 2.0 * m) *
             opt;
    };
    s.algorithms.push_back(std::move(a));
    suites.push_back(std::move(s));
  }

  {
    HarnessSuite s;
    s.name = "repeated-greedy";
    s.generate = system_pool;
    HarnessAlgo a;
    a.name = "repeated-greedy";
    a.run = [](const Instance& inst, CountedObjective& f,
               CountedIndependence& indep) {
      return repeated_greedy(inst.ground, f, indep, rg_ell(inst));
    };
    a.bound = [](const Instance& inst, double opt, const RunReport&) {
      double ell = rg_ell(inst);
      double k = inst.constraint->declared_k();
      return (1.0 - 1.0 / ell) / (k + 1.0 + kUsmAlpha * (ell - 1.0) / 2.0) *
             opt;
    };
    s.algorithms.push_back(std::move(a));
    suites.push_back(std::move(s));
  }

  {
    HarnessSuite s;
    s.name = "greedy-monotone";
    s.generate = monotone_pool;
    HarnessAlgo a;
    a.name = "greedy";
    a.run = [](const Instance& inst, CountedObjective& f,
               CountedIndependence& indep) {
      return greedy(inst.ground, f, indep);
    };
    a.bound = [](const Instance& inst, double opt, const RunReport&) {
      return opt / (inst.constraint->declared_k() + 1.0);
    };
    s.algorithms.push_back(std::move(a));
    suites.push_back(std::move(s));
  }

  {
    HarnessSuite s;
    s.name = "modified-repeated-greedy";
    s.generate = knapsack_pool;
    for (double rho : density_grid) {
      HarnessAlgo a;
      a.name = "modified-repeated-greedy[rho=" + format_double(rho) + "]";
      a.run = [rho, eps](const Instance& inst, CountedObjective& f,
                         CountedIndependence& indep) {
        return modified_repeated_greedy(inst.ground, f, indep, inst.knapsacks,
                                        rg_ell(inst), rho, eps);
      };
      a.bound = [rho, eps](const Instance& inst, double opt,
                           const RunReport& report) {
        if (report.knapsack_rejected.value_or(false)) return rho / 2.0;
        double ell = rg_ell(inst);
        double k = inst.constraint->declared_k();
        double m = inst.knapsacks.num_knapsacks();
        double denom = k + 1.0 + kUsmAlpha * (ell - 1.0) / 2.0;
        return (1.0 - eps) / denom * ((1.0 - 1.0 / ell - eps) * opt - rho * m);
      };
      s.algorithms.push_back(std::move(a));
    }
    suites.push_back(std::move(s));
  }

  {
    HarnessSuite s;
    s.name = "density-search-rg";
    s.generate = knapsack_pool;
    HarnessAlgo a;
    a.name = "density-search-rg";
    a.run = [eps, delta](const Instance& inst, CountedObjective& f,
                         CountedIndependence& indep) {
      return density_search_rg(inst.ground, f, indep, inst.knapsacks,
                               rg_ell(inst), delta, eps);
    };
    a.bound = [eps, delta](const Instance& inst, double opt,
                           const RunReport&) {
      double ell = rg_ell(inst);
      double k = inst.constraint->declared_k();
      double m = inst.knapsacks.num_knapsacks();
      double denom = k + 2.0 * m + 1.0 + kUsmAlpha * (ell - 1.0) / 2.0;
      double shrink = (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
      return (1.0 - delta) * shrink * (1.0 - 1.0 / ell) / denom * opt;
    };
    s.algorithms.push_back(std::move(a));
    suites.push_back(std::move(s));
  }

  return suites;
}

}  // namespace submax
