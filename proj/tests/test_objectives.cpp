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
#include <memory>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "submax/element_set.hpp"
#include "submax/instances.hpp"
#include "submax/objective.hpp"
#include "submax/objectives.hpp"
#include "submax/rng.hpp"
#include "submax/verify.hpp"

using namespace submax;

TEST_CASE("modular objective sums weights plus bias") {
  auto f = make_modular({5.0, 3.0});
  CHECK(f->value(ElementSet{}) == doctest::Approx(0.0));
  CHECK(f->value(ElementSet{0}) == doctest::Approx(5.0));
  CHECK(f->value(ElementSet{0, 1}) == doctest::Approx(8.0));

  auto shifted = make_modular({-1.0, 4.0}, 2.0);
  CHECK(shifted->value(ElementSet{}) == doctest::Approx(2.0));
  CHECK(shifted->value(ElementSet{0}) == doctest::Approx(1.0));

  GroundSet g{2};
  CHECK(check_submodular(*f, g));
  CHECK(check_monotone(*f, g));
  CHECK_FALSE(check_monotone(*shifted, GroundSet{2}));
}

TEST_CASE("weighted coverage") {
  // Universe items 0 (weight 2) and 1 (weight 3); element 0 covers {0},
  // element 1 covers {0, 1}.
  auto f = make_coverage({{0}, {0, 1}}, {2.0, 3.0});
  CHECK(f->value(ElementSet{}) == doctest::Approx(0.0));
  CHECK(f->value(ElementSet{0}) == doctest::Approx(2.0));
  CHECK(f->value(ElementSet{1}) == doctest::Approx(5.0));
  CHECK(f->value(ElementSet{0, 1}) == doctest::Approx(5.0));

  GroundSet g{2};
  CHECK(check_submodular(*f, g));
  CHECK(check_monotone(*f, g));

  CHECK_THROWS_AS(make_coverage({{2}}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("cut of the unit triangle") {
  // K_3 with unit edges: every singleton cuts its two incident edges.
  std::vector<double> w = {0, 1, 1, 1, 0, 1, 1, 1, 0};
  auto f = make_cut(3, w);
  for (int u = 0; u < 3; ++u) {
    CHECK(f->value(ElementSet{u}) == doctest::Approx(2.0));
  }
  CHECK(f->value(ElementSet{0, 1}) == doctest::Approx(2.0));
  CHECK(f->value(ElementSet{0, 1, 2}) == doctest::Approx(0.0));

  // Completing the triangle destroys both remaining cut edges.
  CountedObjective cf(f);
  CHECK(marginal_gain(cf, 2, ElementSet{0, 1}) == doctest::Approx(-2.0));

  GroundSet g{3};
  CHECK(check_submodular(*f, g));
  CHECK_FALSE(check_monotone(*f, g));

  CHECK_THROWS_AS(make_cut(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_cut(2, {1, 0, 0, 1}), std::invalid_argument);   // diag
  CHECK_THROWS_AS(make_cut(2, {0, 1, 2, 0}), std::invalid_argument);   // asym
}

TEST_CASE("similarity matrix validation and clamping") {
  SimilarityMatrix ok(2, {1.0, 0.5, 0.5, 1.0});
  CHECK(ok.size() == 2);
  CHECK(ok.at(0, 1) == doctest::Approx(0.5));
  CHECK(ok.row_sum(0) == doctest::Approx(1.5));
  CHECK(ok.clamped_entries() == 0);

  SimilarityMatrix clamped(2, {1.2, 0.3, 0.3, 1.0});
  CHECK(clamped.at(0, 0) == doctest::Approx(1.0));
  CHECK(clamped.clamped_entries() > 0);

  CHECK_THROWS_AS(SimilarityMatrix(2, {1.0, 0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SimilarityMatrix(2, {1.0, 0.5, 0.4, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SimilarityMatrix(2, {0.0, 0.5, 0.5, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("cosine kernel landmarks") {
  // Scaled copies agree perfectly; orthogonal and antipodal pairs decay by
  // exp(-sigma^2) and exp(-2 sigma^2).
  SimilarityMatrix s =
      cosine_kernel({{1.0, 0.0}, {3.0, 0.0}, {0.0, 2.0}, {-1.0, 0.0}}, 1.0);
  CHECK(s.at(0, 1) == doctest::Approx(1.0));
  CHECK(s.at(0, 2) == doctest::Approx(std::exp(-1.0)));
  CHECK(s.at(0, 3) == doctest::Approx(std::exp(-2.0)));
  CHECK(s.at(2, 2) == doctest::Approx(1.0));

  CHECK_THROWS_AS(cosine_kernel({{1.0}, {0.0}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(cosine_kernel({{1.0}, {1.0, 2.0}}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(cosine_kernel({{1.0}}, 0.0), std::invalid_argument);
}

TEST_CASE("diverse summarization scores") {
  auto sim = std::make_shared<SimilarityMatrix>(2,
      std::vector<double>{1.0, 0.5, 0.5, 1.0});
  auto f = make_diverse_summarization(sim, 1.0);
  CHECK(f->value(ElementSet{}) == doctest::Approx(0.0));
  // (1/2) * (coverage 1.5 - redundancy 1.0).
  CHECK(f->value(ElementSet{0}) == doctest::Approx(0.25));
  // Full set: coverage 3, redundancy 3.
  CHECK(f->value(ElementSet{0, 1}) == doctest::Approx(0.0));

  auto half = make_diverse_summarization(sim, 0.5);
  CHECK(half->value(ElementSet{0, 1}) == doctest::Approx(0.75));

  GroundSet g{2};
  CHECK(check_submodular(*f, g));
  CHECK_FALSE(check_monotone(*f, g));
  CHECK(check_monotone(*make_diverse_summarization(sim, 0.0), g));

  CHECK_THROWS_AS(make_diverse_summarization(nullptr, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_diverse_summarization(sim, 1.5),
                  std::invalid_argument);
}

TEST_CASE("summarization cache matches from-scratch evaluation") {
  const int n = 20;
  SplitMix64 rng(99);
  std::vector<std::vector<double>> vectors;
  for (int i = 0; i < n; ++i) {
    std::vector<double> v(4);
    for (double& x : v) x = rng.u01() * 2.0 - 1.0;
    if (std::abs(v[0]) < 0.05) v[0] = 0.5;  // keep vectors away from zero
    vectors.push_back(v);
  }
  auto sim = std::make_shared<SimilarityMatrix>(cosine_kernel(vectors, 0.8));
  CountedObjective f(make_diverse_summarization(sim, 0.9));

  SolutionState state = f.start(ElementSet{});
  ElementSet shadow;
  for (int step = 0; step < 200; ++step) {
    int u = rng.uniform_int(0, n - 1);
    if (!shadow.contains(u)) {
      double after = f.value_add(state, u);
      f.push(state, u, after);
      shadow.insert(u);
    } else {
      double after = f.value_remove(state, u);
      f.pop(state, u, after);
      shadow.erase(u);
    }
    REQUIRE(state.members() == shadow);
    REQUIRE(state.value() ==
            doctest::Approx(f.inner().value(shadow)).epsilon(1e-9));
  }
}

TEST_CASE("random small instances are submodular and non-negative") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (ObjectiveKind kind :
         {ObjectiveKind::kCoverage, ObjectiveKind::kCut,
          ObjectiveKind::kDiverse}) {
      Instance inst = random_instance(seed, 7, kind,
                                      ConstraintKind::kCardinality);
      REQUIRE(check_submodular(*inst.objective, inst.ground));
      // Exhaustive non-negativity: the counting wrapper would throw.
      CountedObjective f(inst.objective);
      for (int mask = 0; mask < (1 << inst.ground.n); ++mask) {
        ElementSet s;
        for (int u = 0; u < inst.ground.n; ++u) {
          if (mask & (1 << u)) s.insert(u);
        }
        REQUIRE(f.value(s) >= -1e-9);
      }
      if (inst.monotone) REQUIRE(check_monotone(*inst.objective, inst.ground));
    }
  }
}
