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

#include "submax/instances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "submax/objectives.hpp"
#include "submax/rng.hpp"

namespace submax {
namespace {

std::shared_ptr<const Objective> random_coverage(SplitMix64& rng, int n) {
  int universe = 2 * n;
  std::vector<double> weights(universe);
  for (double& w : weights) w = 0.5 + 1.5 * rng.u01();
  std::vector<std::vector<int>> covers(n);
  for (auto& list : covers) {
    int degree = rng.uniform_int(1, 4);
    for (int t = 0; t < degree; ++t) list.push_back(rng.uniform_int(0, universe - 1));
  }
  return make_coverage(std::move(covers), std::move(weights));
}

std::shared_ptr<const Objective> random_cut(SplitMix64& rng, int n) {
  std::vector<double> weights(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.u01() < 0.5) {
        double w = 0.2 + 0.8 * rng.u01();
        weights[static_cast<size_t>(i) * n + j] = w;
        weights[static_cast<size_t>(j) * n + i] = w;
      }
    }
  }
  return make_cut(n, std::move(weights));
}

std::vector<std::vector<double>> random_vectors(SplitMix64& rng, int n,
                                                int dim) {
  std::vector<std::vector<double>> vectors(n, std::vector<double>(dim));
  for (auto& v : vectors) {
    double norm_sq = 0.0;
    for (double& x : v) {
      x = 2.0 * rng.u01() - 1.0;
      norm_sq += x * x;
    }
    if (norm_sq < 1e-12) v[0] = 1.0;
  }
  return vectors;
}

std::shared_ptr<const Objective> random_diverse(SplitMix64& rng, int n) {
  auto vectors = random_vectors(rng, n, 3);
  double sigma = 0.7 + 0.8 * rng.u01();
  auto matrix = std::make_shared<SimilarityMatrix>(cosine_kernel(vectors, sigma));
  return make_diverse_summarization(matrix, 1.0);
}

// One partition matroid: every element in exactly one block, per-block caps.
// A matroid is 1-extendible, hence the declared_k override.
std::shared_ptr<const IndependenceSystem> random_partition_matroid(
    SplitMix64& rng, int n) {
  int blocks = rng.uniform_int(2, 4);
  std::vector<std::vector<int>> groups(n);
  for (auto& labels : groups) labels.push_back(rng.uniform_int(0, blocks - 1));
  std::vector<int> limits(blocks);
  for (int& d : limits) d = rng.uniform_int(1, 2);
  return build_partition_limit(std::move(groups), std::move(limits),
                               /*declared_k=*/1);
}

std::shared_ptr<const IndependenceSystem> random_constraint(
    SplitMix64& rng, int n, ConstraintKind kind, std::string* label) {
  switch (kind) {
    case ConstraintKind::kCardinality: {
      int limit = rng.uniform_int(1, std::max(1, n / 3));
      *label += "/card" + std::to_string(limit);
      return build_cardinality(n, limit);
    }
    case ConstraintKind::kPartitionIntersection: {
      int k = rng.uniform_int(1, 3);
      std::vector<std::shared_ptr<const IndependenceSystem>> parts;
      for (int t = 0; t < k; ++t) parts.push_back(random_partition_matroid(rng, n));
      *label += "/part" + std::to_string(k);
      return build_intersection(std::move(parts));
    }
    case ConstraintKind::kInterval: {
      std::vector<int> keys(n);
      for (int& key : keys) key = rng.uniform_int(0, n);
      int gap = rng.uniform_int(1, 2);
      *label += "/gap" + std::to_string(gap);
      return build_interval_separation(std::move(keys), gap);
    }
    case ConstraintKind::kHardness: {
      // Structured sizes h*k*m <= n, preferring the largest that fits.
      struct Params { int k, h, m; };
      const Params table[] = {{2, 4, 1}, {1, 2, 3}, {1, 2, 2}, {1, 2, 1}};
      for (const Params& p : table) {
        if (p.h * p.k * p.m <= n) {
          *label += "/hard" + std::to_string(p.k) + "." + std::to_string(p.h) +
                    "." + std::to_string(p.m);
          return build_hardness_system(p.k, p.h, p.m);
        }
      }
      *label += "/hard1.2.1";
      return build_hardness_system(1, 2, 1);
    }
  }
  throw std::invalid_argument("unknown constraint kind");
}

KnapsackSet random_knapsacks(SplitMix64& rng, int n, int m) {
  if (m <= 0) return KnapsackSet();
  std::vector<std::vector<double>> costs(m, std::vector<double>(n));
  for (auto& row : costs) {
    for (double& c : row) c = 0.05 + 0.7 * rng.u01();
  }
  return KnapsackSet(std::move(costs), std::vector<double>(m, 1.0));
}

}  // namespace

Instance random_instance(std::uint64_t seed, int n, ObjectiveKind objective,
                         ConstraintKind constraint, int num_knapsacks) {
  if (n < 1) throw std::invalid_argument("random_instance: n must be >= 1");
  SplitMix64 rng(derive_seed(seed, 0xa11ce));
  Instance instance;
  instance.label = "seed" + std::to_string(seed);

  std::string constraint_label;
  instance.constraint = random_constraint(rng, n, constraint, &constraint_label);
  if (constraint == ConstraintKind::kHardness) {
    n = instance.constraint->ground_size();
  }
  instance.ground = GroundSet{n};

  switch (objective) {
    case ObjectiveKind::kCoverage:
      instance.objective = random_coverage(rng, n);
      instance.monotone = true;
      instance.label += "/coverage";
      break;
    case ObjectiveKind::kCut:
      instance.objective = random_cut(rng, n);
      instance.label += "/cut";
      break;
    case ObjectiveKind::kDiverse:
      instance.objective = random_diverse(rng, n);
      instance.label += "/diverse";
      break;
  }
  instance.label += constraint_label;
  instance.knapsacks = random_knapsacks(rng, n, num_knapsacks);
  if (num_knapsacks > 0) {
    instance.label += "/m" + std::to_string(num_knapsacks);
  }
  return instance;
}

Instance synthetic_diverse_instance(std::uint64_t seed, int n,
                                    int cardinality_limit) {
  SplitMix64 rng(derive_seed(seed, 0xd1f2));
  Instance instance;
  instance.ground = GroundSet{n};
  auto vectors = random_vectors(rng, n, 4);
  auto matrix = std::make_shared<SimilarityMatrix>(cosine_kernel(vectors, 1.0));
  instance.objective = make_diverse_summarization(matrix, 1.0);
  instance.constraint = build_cardinality(n, cardinality_limit);
  instance.label = "diverse-n" + std::to_string(n);
  return instance;
}

}  // namespace submax
