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

#ifndef SUBMAX_INSTANCES_H_
#define SUBMAX_INSTANCES_H_

#include <cstdint>
#include <memory>
#include <string>

#include "submax/constraints.hpp"
#include "submax/independence.hpp"
#include "submax/objective.hpp"

namespace submax {

enum class ObjectiveKind { kCoverage, kCut, kDiverse };
enum class ConstraintKind {
  kCardinality,
  kPartitionIntersection,
  kInterval,
  kHardness,
};

// A self-contained problem: objective + independence system (+ optional
// knapsacks) over the same ground set.
struct Instance {
  GroundSet ground;
  std::shared_ptr<const Objective> objective;
  std::shared_ptr<const IndependenceSystem> constraint;
  KnapsackSet knapsacks;
  bool monotone = false;  // true when the objective is monotone by build
  std::string label;
};

// Deterministic in (seed, n, kinds): the same arguments always produce the
// same instance. Knapsack costs are drawn so that every singleton fits. For
// the hardness constraint the ground size is the largest structured size
// <= n, not n itself. Intended for desk-scale verification (n <= 14 keeps
// brute force cheap); the objective kinds also scale to benchmark sizes.
Instance random_instance(std::uint64_t seed, int n, ObjectiveKind objective,
                         ConstraintKind constraint, int num_knapsacks = 0);

// Diverse-summarization objective over random feature vectors plus a
// cardinality limit; used for count-ceiling checks and benchmarks.
Instance synthetic_diverse_instance(std::uint64_t seed, int n,
                                    int cardinality_limit);

}  // namespace submax

#endif  // SUBMAX_INSTANCES_H_
