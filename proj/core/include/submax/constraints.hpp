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

#ifndef SUBMAX_CONSTRAINTS_H_
#define SUBMAX_CONSTRAINTS_H_

#include <memory>
#include <span>
#include <vector>

#include "submax/independence.hpp"

namespace submax {

// Inclusive feasibility tolerance for normalized knapsack budgets.
inline constexpr double kKnapsackTolerance = 1e-12;

// A bundle of m linear budget constraints with costs normalized so every
// budget is 1. Elements whose own cost exceeds a budget can never be packed;
// they are recorded in dropped() and the ingestion layer removes them from
// the ground set (with a warning).
class KnapsackSet {
 public:
  KnapsackSet() = default;  // m = 0

  // costs[r][u] >= 0 raw cost of element u in knapsack r; budgets[r] > 0.
  KnapsackSet(std::vector<std::vector<double>> costs,
              std::vector<double> budgets);

  int num_knapsacks() const { return static_cast<int>(costs_.size()); }
  int ground_size() const { return ground_size_; }

  double cost(int r, int u) const { return costs_[r][u]; }
  // Sum of the normalized costs of u across all knapsacks.
  double total_cost(int u) const;

  bool singleton_feasible(int u) const;
  const std::vector<int>& dropped() const { return dropped_; }

 private:
  int ground_size_ = 0;
  std::vector<std::vector<double>> costs_;
  std::vector<int> dropped_;
};

// True iff adding u keeps every knapsack within its (unit) budget, given the
// current per-knapsack totals of the solution.
bool knapsack_can_add(const KnapsackSet& sacks, std::span<const double> totals,
                      int u);

// |S| <= limit. A matroid, declared 1-extendible.
std::shared_ptr<const IndependenceSystem> build_cardinality(int ground_size,
                                                            int limit);

// Each element carries a subset of group labels 0..num_labels-1; S is
// independent iff for every label g, |{e in S : g in groups[e]}| <= limit[g].
// Declared k-extendible with k = number of labels; pass declared_k to
// override (a single-label-per-element partition is a matroid, k = 1).
std::shared_ptr<const IndependenceSystem> build_partition_limit(
    std::vector<std::vector<int>> groups, std::vector<int> limits,
    int declared_k = -1);

// Elements carry integer keys; S is independent iff all pairwise key
// distances are >= gap. Declared 2-extendible.
std::shared_ptr<const IndependenceSystem> build_interval_separation(
    std::vector<int> keys, int gap = 1);

// Intersection of several systems: independent iff independent in every
// part. Declared k = sum of part ks; extendible only if all parts are.
std::shared_ptr<const IndependenceSystem> build_intersection(
    std::vector<std::shared_ptr<const IndependenceSystem>> parts);

// The piecewise charge used by the structured hard family below:
//   g(x) = min{x, 2km/h} + max{(x - 2km/h)/k, 0}.
double g_eval(double x, int k, int h, int m);

// Structured k-extendible family on h groups of k*m elements each (h must be
// a positive multiple of 2k): S is independent iff
// g(|S inter H_1|) + |S \ H_1| <= m, where H_1 is the first group. Its
// maximum independent set has size k(m - 2km/h) + 2km/h, while every set of
// size <= m is independent, so greedy-style algorithms can be driven to the
// k+1 barrier against the cardinality-m matroid on the same ground set.
std::shared_ptr<const IndependenceSystem> build_hardness_system(int k, int h,
                                                                int m);

// k(m - 2km/h) + 2km/h as a double (the hard family's max independent size).
double hardness_max_independent_size(int k, int h, int m);

}  // namespace submax

#endif  // SUBMAX_CONSTRAINTS_H_
