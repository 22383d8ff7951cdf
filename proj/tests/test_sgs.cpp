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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "submax/constraints.hpp"
#include "submax/instances.hpp"
#include "submax/objectives.hpp"
#include "submax/repeated.hpp"
#include "submax/sgs.hpp"
#include "submax/verify.hpp"
#include "support/reference.hpp"

using namespace submax;
using submax_test::reference_sgs;
using submax_test::reference_threshold;

namespace {

// The small deterministic corpus shared by the equivalence tests.
std::vector<Instance> small_corpus(int num_knapsacks = 0) {
  std::vector<Instance> out;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    for (ObjectiveKind obj : {ObjectiveKind::kCoverage, ObjectiveKind::kCut,
                              ObjectiveKind::kDiverse}) {
      for (ConstraintKind con : {ConstraintKind::kCardinality,
                                 ConstraintKind::kPartitionIntersection}) {
        int n = 6 + static_cast<int>(seed % 7);
        out.push_back(random_instance(seed, n, obj, con, num_knapsacks));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("exchange bound by system class") {
  CHECK(exchange_bound(SystemClass::kExtendible, 2, 4) == 3);
  CHECK(exchange_bound(SystemClass::kExtendible, 5, 3) == 5);
  CHECK(exchange_bound(SystemClass::kSystem, 2, 4) == 5);
  CHECK(exchange_bound(SystemClass::kExtendible, 1, 1) == 1);
  CHECK_THROWS_AS(exchange_bound(SystemClass::kSystem, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(exchange_bound(SystemClass::kSystem, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("solution-count selection") {
  CHECK(choose_num_solutions(SystemClass::kExtendible, 3, 0, false) == 4);
  CHECK(choose_num_solutions(SystemClass::kSystem, 3, 0, false) == 4);
  CHECK(choose_num_solutions(SystemClass::kExtendible, 1, 1, false) == 3);
  CHECK(choose_num_solutions(SystemClass::kSystem, 2, 1, false) == 4);
  CHECK(choose_num_solutions(SystemClass::kExtendible, 3, 0, true) == 4);
  CHECK(choose_num_solutions(SystemClass::kSystem, 5, 2, true) == 1);
  CHECK_THROWS_AS(choose_num_solutions(SystemClass::kSystem, 0, 0, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(choose_num_solutions(SystemClass::kSystem, 1, -1, false),
                  std::invalid_argument);
}

TEST_CASE("density-scale selection") {
  CHECK(choose_density_scale(SystemClass::kSystem, 2, 4, 1, 0.1, false) ==
        doctest::Approx(0.14625).epsilon(1e-12));
  CHECK(choose_density_scale(SystemClass::kExtendible, 1, 2, 0, 0.1, false) ==
        doctest::Approx(0.36).epsilon(1e-12));
  CHECK(choose_density_scale(SystemClass::kSystem, 1, 1, 0, 0.1, true) ==
        doctest::Approx(0.81).epsilon(1e-12));
  CHECK_THROWS_AS(choose_density_scale(SystemClass::kSystem, 1, 1, 0, 0.1,
                                       false),
                  std::invalid_argument);
  CHECK_THROWS_AS(choose_density_scale(SystemClass::kSystem, 1, 2, 0, 0.6,
                                       false),
                  std::invalid_argument);
}

TEST_CASE("pair queue orders by gain, then element, then solution") {
  using E = PairQueue::Entry;
  CHECK(PairQueue::ordered_before({7, 9, 9}, {5, 0, 0}));
  CHECK(PairQueue::ordered_before({5, 1, 1}, {5, 2, 0}));
  CHECK(PairQueue::ordered_before({5, 1, 0}, {5, 1, 1}));
  CHECK_FALSE(PairQueue::ordered_before({5, 1, 1}, {5, 1, 0}));

  PairQueue q;
  for (const E& e :
       {E{5, 2, 0}, E{5, 1, 1}, E{5, 1, 0}, E{3, 0, 0}, E{7, 9, 9}}) {
    q.push(e);
  }
  std::vector<int> elements;
  std::vector<int> solutions;
  while (!q.empty()) {
    elements.push_back(q.top().element);
    solutions.push_back(q.top().solution);
    q.pop();
  }
  CHECK(elements == std::vector<int>{9, 1, 1, 2, 0});
  CHECK(solutions == std::vector<int>{9, 0, 1, 0, 0});
}

TEST_CASE("simultaneous greedy: two singleton solutions") {
  GroundSet g{2};
  CountedObjective f(make_modular({5.0, 3.0}));
  CountedIndependence ind(build_cardinality(2, 1));
  RunAudit audit;
  RunReport r = simultaneous_greedys(g, f, ind, 2, &audit);

  CHECK(r.algorithm == "simultaneous-greedys");
  CHECK(r.params.at("ell") == "2");
  CHECK(r.solution == ElementSet{0});
  CHECK(r.value == doctest::Approx(5.0));
  REQUIRE(r.candidates.size() == 2);
  CHECK(r.candidates[0].label == "S1");
  CHECK(r.candidates[0].set == ElementSet{0});
  CHECK(r.candidates[1].set == ElementSet{1});

  REQUIRE(audit.accepts.size() == 2);
  CHECK(audit.accepts[0].element == 0);
  CHECK(audit.accepts[0].solution == 0);
  CHECK(audit.accepts[0].gain == doctest::Approx(5.0));
  CHECK(std::isnan(audit.accepts[0].threshold));
  CHECK(audit.accepts[1].element == 1);
  CHECK(audit.accepts[1].solution == 1);
  CHECK(audit.accepts[1].gain == doctest::Approx(3.0));

  CHECK_THROWS_AS(simultaneous_greedys(g, f, ind, 0), std::invalid_argument);
}

TEST_CASE("simultaneous greedy finds the triangle cut optimum") {
  GroundSet g{3};
  CountedObjective f(make_cut(3, {0, 1, 1, 1, 0, 1, 1, 1, 0}));
  CountedIndependence ind(build_cardinality(3, 2));
  RunReport r = simultaneous_greedys(g, f, ind, 2);
  CHECK(r.value == doctest::Approx(2.0));  // every cut of K_3 is 0 or 2
  CHECK(r.solution == ElementSet{0});
  CHECK(r.candidates[0].set == ElementSet{0});
  CHECK(r.candidates[1].set == ElementSet{1});
}

TEST_CASE("one simultaneous solution is plain greedy") {
  for (const Instance& inst : small_corpus()) {
    CountedObjective f1(inst.objective);
    CountedIndependence i1(inst.constraint);
    RunReport sgs = simultaneous_greedys(inst.ground, f1, i1, 1);

    CountedObjective f2(inst.objective);
    CountedIndependence i2(inst.constraint);
    RunReport g = greedy(inst.ground, f2, i2);

    REQUIRE(sgs.solution == g.solution);
    REQUIRE(sgs.value == g.value);
  }
}

TEST_CASE("lazy simultaneous greedy matches the eager rescan") {
  int checked = 0;
  for (const Instance& inst : small_corpus()) {
    for (int ell = 1; ell <= 3; ++ell) {
      CountedObjective f1(inst.objective);
      CountedIndependence i1(inst.constraint);
      RunReport lazy = simultaneous_greedys(inst.ground, f1, i1, ell);

      CountedObjective f2(inst.objective);
      CountedIndependence i2(inst.constraint);
      submax_test::ReferenceRun eager =
          reference_sgs(inst.ground, f2, i2, ell);

      REQUIRE(lazy.candidates.size() == eager.solutions.size());
      for (std::size_t j = 0; j < eager.solutions.size(); ++j) {
        REQUIRE(lazy.candidates[j].set == eager.solutions[j]);
      }
      REQUIRE(lazy.solution == eager.best);
      REQUIRE(lazy.value == eager.best_value);
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("acceptance audit replays to disjoint feasible prefixes") {
  for (const Instance& inst : small_corpus()) {
    const int ell = 3;
    CountedObjective f(inst.objective);
    CountedIndependence ind(inst.constraint);
    RunAudit audit;
    RunReport r = simultaneous_greedys(inst.ground, f, ind, ell, &audit);

    std::vector<char> taken(inst.ground.n, 0);
    std::vector<ElementSet> replay(ell);
    for (const AcceptRecord& a : audit.accepts) {
      REQUIRE(a.gain > 0.0);
      REQUIRE_FALSE(taken[a.element]);  // solutions stay disjoint
      taken[a.element] = 1;
      // Every intermediate set was feasible when the element arrived.
      REQUIRE(inst.constraint->can_add(replay[a.solution], a.element));
      replay[a.solution].insert(a.element);
    }
    for (int j = 0; j < ell; ++j) {
      REQUIRE(replay[j] == r.candidates[j].set);
      REQUIRE(inst.constraint->is_independent(replay[j]));
    }
  }
}

TEST_CASE("threshold sweep trace at eps = 0.4") {
  GroundSet g{2};
  CountedObjective f(make_modular({4.0, 2.0}));
  CountedIndependence ind(build_cardinality(2, 2));
  RunAudit audit;
  RunReport r = fast_sgs(g, f, ind, 1, 0.4, &audit);

  CHECK(r.solution == ElementSet{0, 1});
  CHECK(r.value == doctest::Approx(6.0));
  CHECK(r.params.at("rounds") == "4");  // tau: 4, 2.4, 1.44, 0.864
  CHECK(audit.rounds == 4);
  REQUIRE(audit.accepts.size() == 2);
  CHECK(audit.accepts[0].element == 0);
  CHECK(audit.accepts[0].threshold == doctest::Approx(4.0));
  CHECK(audit.accepts[1].element == 1);
  CHECK(audit.accepts[1].threshold == doctest::Approx(1.44));
  CHECK(audit.accepts[1].gate == doctest::Approx(1.44));  // rho = 0
}

TEST_CASE("threshold sweep round count is pinned by n and eps") {
  Instance inst = random_instance(5, 100, ObjectiveKind::kDiverse,
                                  ConstraintKind::kCardinality);
  REQUIRE(inst.ground.n == 100);
  CountedObjective f(inst.objective);
  CountedIndependence ind(inst.constraint);
  RunReport r = fast_sgs(inst.ground, f, ind, 2, 0.1);
  // Smallest t with 0.9^t <= 1/1000 is 66.
  CHECK(r.params.at("rounds") == "66");
}

TEST_CASE("threshold sweep with no positive singleton returns empty") {
  GroundSet g{3};
  CountedObjective f(make_modular({0.0, 0.0, 0.0}));
  CountedIndependence ind(build_cardinality(3, 2));
  RunReport r = fast_sgs(g, f, ind, 2, 0.1);
  CHECK(r.solution.empty());
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(r.params.at("rounds") == "0");
}

TEST_CASE("threshold sweep parameter validation") {
  GroundSet g{2};
  CountedObjective f(make_modular({1.0, 1.0}));
  CountedIndependence ind(build_cardinality(2, 1));
  CHECK_THROWS_AS(fast_sgs(g, f, ind, 0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(fast_sgs(g, f, ind, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fast_sgs(g, f, ind, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(fast_sgs(g, f, ind, 1, -0.1), std::invalid_argument);
}

TEST_CASE("lazy threshold sweep matches the literal sweep") {
  int checked = 0;
  for (const Instance& inst : small_corpus()) {
    for (int ell : {1, 2}) {
      for (double eps : {0.1, 0.3}) {
        CountedObjective f1(inst.objective);
        CountedIndependence i1(inst.constraint);
        RunReport lazy = fast_sgs(inst.ground, f1, i1, ell, eps);

        CountedObjective f2(inst.objective);
        CountedIndependence i2(inst.constraint);
        submax_test::ReferenceRun eager =
            reference_threshold(inst.ground, f2, i2, ell, eps);

        REQUIRE(lazy.params.at("rounds") == std::to_string(eager.rounds));
        for (std::size_t j = 0; j < eager.solutions.size(); ++j) {
          REQUIRE(lazy.candidates[j].set == eager.solutions[j]);
        }
        REQUIRE(lazy.solution == eager.best);
        REQUIRE(lazy.value == eager.best_value);
        ++checked;
      }
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("knapsack sweep: budget rejection is recorded and sticky") {
  GroundSet g{2};
  CountedObjective f(make_modular({6.0, 5.0}));
  CountedIndependence ind(build_cardinality(2, 2));
  KnapsackSet sacks({{0.7, 0.6}}, {1.0});
  RunAudit audit;
  RunReport r = knapsack_sgs(g, f, ind, sacks, 1, 8.0, 0.1, &audit);

  // Element 0 clears its density gate max(6, 8*0.7) at tau = 6; element 1
  // clears max(tau, 4.8) once tau decays to 4.86, then the budget refuses it.
  CHECK(r.solution == ElementSet{0});
  CHECK(r.value == doctest::Approx(6.0));
  REQUIRE(r.knapsack_rejected.has_value());
  CHECK(r.knapsack_rejected.value());
  REQUIRE(audit.accepts.size() == 1);
  CHECK(audit.accepts[0].element == 0);
  CHECK(audit.accepts[0].gate == doctest::Approx(6.0));

  // The best feasible singleton is always a candidate.
  bool has_singleton = false;
  for (const Candidate& c : r.candidates) {
    if (c.label == "singleton") {
      has_singleton = true;
      CHECK(c.set == ElementSet{0});
    }
  }
  CHECK(has_singleton);

  CHECK_THROWS_AS(knapsack_sgs(g, f, ind, sacks, 1, -1.0, 0.1),
                  std::invalid_argument);
}

TEST_CASE("knapsack sweep: the singleton candidate can win outright") {
  GroundSet g{2};
  CountedObjective f(make_modular({10.0, 6.0}));
  CountedIndependence ind(build_cardinality(2, 2));
  KnapsackSet sacks({{1.0, 0.5}}, {1.0});
  // rho so large that no element ever clears its density gate.
  RunReport r = knapsack_sgs(g, f, ind, sacks, 2, 100.0, 0.1);
  CHECK(r.solution == ElementSet{0});
  CHECK(r.value == doctest::Approx(10.0));
  REQUIRE(r.knapsack_rejected.has_value());
  CHECK_FALSE(r.knapsack_rejected.value());  // gate failures are not budget ones
}

TEST_CASE("knapsack sweep without budgets reduces to the threshold sweep") {
  KnapsackSet none;
  for (const Instance& inst : small_corpus()) {
    CountedObjective f1(inst.objective);
    CountedIndependence i1(inst.constraint);
    RunAudit a1;
    RunReport fast = fast_sgs(inst.ground, f1, i1, 2, 0.2, &a1);

    CountedObjective f2(inst.objective);
    CountedIndependence i2(inst.constraint);
    RunAudit a2;
    RunReport knap = knapsack_sgs(inst.ground, f2, i2, none, 2, 0.0, 0.2, &a2);

    CHECK_FALSE(knap.knapsack_rejected.has_value());
    REQUIRE(a1.accepts.size() == a2.accepts.size());
    for (std::size_t i = 0; i < a1.accepts.size(); ++i) {
      REQUIRE(a1.accepts[i].element == a2.accepts[i].element);
      REQUIRE(a1.accepts[i].solution == a2.accepts[i].solution);
      REQUIRE(a1.accepts[i].gain == a2.accepts[i].gain);
    }
    REQUIRE(a1.rounds == a2.rounds);
    // Oracles here have f({}) = 0, so the extra singleton candidate cannot
    // beat the swept solutions and the outputs coincide too.
    REQUIRE(fast.solution == knap.solution);
    REQUIRE(fast.value == knap.value);
  }
}

TEST_CASE("zero-cost knapsacks never reject and never change the sweep") {
  Instance inst = random_instance(3, 9, ObjectiveKind::kCoverage,
                                  ConstraintKind::kCardinality);
  KnapsackSet zero({std::vector<double>(9, 0.0)}, {1.0});

  CountedObjective f1(inst.objective);
  CountedIndependence i1(inst.constraint);
  RunAudit a1;
  RunReport fast = fast_sgs(inst.ground, f1, i1, 2, 0.1, &a1);

  CountedObjective f2(inst.objective);
  CountedIndependence i2(inst.constraint);
  RunAudit a2;
  RunReport knap = knapsack_sgs(inst.ground, f2, i2, zero, 2, 2.0, 0.1, &a2);

  REQUIRE(knap.knapsack_rejected.has_value());
  CHECK_FALSE(knap.knapsack_rejected.value());
  REQUIRE(a1.accepts.size() == a2.accepts.size());
  for (std::size_t i = 0; i < a1.accepts.size(); ++i) {
    CHECK(a1.accepts[i].element == a2.accepts[i].element);
    CHECK(a1.accepts[i].solution == a2.accepts[i].solution);
  }
  CHECK(fast.value == knap.value);
}

TEST_CASE("density search: binary descent when every probe rejects") {
  // Two heavy elements (values 100 and 90, each 90% of the budget) atop 998
  // worthless ones: whichever grid point the search probes, element 0 is
  // accepted and element 1 then overflows the budget, so every inner run
  // reports a rejection and the search walks down to grid point 1.
  const int n = 1000;
  std::vector<double> weights(n, 0.0), costs(n, 0.0);
  weights[0] = 100.0;
  weights[1] = 90.0;
  costs[0] = costs[1] = 0.9;

  GroundSet g{n};
  CountedObjective f(make_modular(weights));
  CountedIndependence ind(build_cardinality(n, n));
  KnapsackSet sacks({costs}, {1.0});
  RunReport r = density_search_sgs(g, f, ind, sacks, 1, 0.25, 0.1, 0.01);

  CHECK(r.params.at("grid_upper") == "28");  // ceil(ln 1000 / 0.25)
  CHECK(r.params.at("inner_calls") == "6");  // probes 15, 8, 5, 3, 2, then 1
  CHECK(r.solution == ElementSet{0});
  CHECK(r.value == doctest::Approx(100.0));
  REQUIRE(r.knapsack_rejected.has_value());
  CHECK(r.knapsack_rejected.value());
  int rho_candidates = 0;
  for (const Candidate& c : r.candidates) {
    if (c.label.rfind("rho=", 0) == 0) ++rho_candidates;
  }
  CHECK(rho_candidates == 6);
}

TEST_CASE("density search: binary ascent when no probe rejects") {
  // All costs are zero, so budgets never reject and the search climbs.
  const int n = 1000;
  std::vector<double> weights(n), costs(n, 0.0);
  for (int u = 0; u < n; ++u) weights[u] = static_cast<double>(u % 5) + 1.0;

  GroundSet g{n};
  CountedObjective f(make_modular(weights));
  CountedIndependence ind(build_cardinality(n, 10));
  KnapsackSet sacks({costs}, {1.0});
  RunReport r = density_search_sgs(g, f, ind, sacks, 1, 0.25, 0.1, 0.01);

  CHECK(r.params.at("grid_upper") == "28");
  CHECK(r.params.at("inner_calls") == "5");  // probes 15, 22, 25, 27, then 27
  REQUIRE(r.knapsack_rejected.has_value());
  CHECK_FALSE(r.knapsack_rejected.value());
}

TEST_CASE("density search: two-point grid needs a single probe") {
  GroundSet g{2};
  CountedObjective f(make_modular({6.0, 5.0}));
  CountedIndependence ind(build_cardinality(2, 2));
  KnapsackSet sacks({{0.7, 0.6}}, {1.0});
  RunReport r = density_search_sgs(g, f, ind, sacks, 1, 0.45, 0.1, 0.1);
  CHECK(r.params.at("grid_upper") == "2");  // ceil(ln 2 / 0.45)
  CHECK(r.params.at("inner_calls") == "1");
  CHECK(r.value == doctest::Approx(6.0));
}

TEST_CASE("density search without budgets and its determinism") {
  Instance inst = random_instance(7, 10, ObjectiveKind::kCut,
                                  ConstraintKind::kCardinality);
  KnapsackSet none;

  CountedObjective f1(inst.objective);
  CountedIndependence i1(inst.constraint);
  RunReport a = density_search_sgs(inst.ground, f1, i1, none, 2, 0.25, 0.1);

  CHECK_FALSE(a.knapsack_rejected.has_value());
  double best_candidate = 0.0;
  for (const Candidate& c : a.candidates) {
    best_candidate = std::max(best_candidate, c.value);
  }
  CHECK(a.value == doctest::Approx(best_candidate));

  CountedObjective f2(inst.objective);
  CountedIndependence i2(inst.constraint);
  RunReport b = density_search_sgs(inst.ground, f2, i2, none, 2, 0.25, 0.1);
  CHECK(a.solution == b.solution);
  CHECK(a.value == b.value);
  CHECK(a.params == b.params);

  CHECK_THROWS_AS(
      density_search_sgs(inst.ground, f1, i1, none, 2, 0.6, 0.1),
      std::invalid_argument);
  // The default density scale needs ell >= 2 on non-monotone objectives.
  CHECK_THROWS_AS(
      density_search_sgs(inst.ground, f1, i1, none, 1, 0.25, 0.1),
      std::invalid_argument);
}
