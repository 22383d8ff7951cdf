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

#ifndef SUBMAX_OBJECTIVES_H_
#define SUBMAX_OBJECTIVES_H_

#include <map>
#include <memory>
#include <vector>

#include "submax/objective.hpp"

namespace submax {

// Dense symmetric similarity matrix with entries in [0, 1] and positive
// diagonal. Row sums are precomputed once.
class SimilarityMatrix {
 public:
  // Row-major entries; symmetry is required within 1e-9 (then made exact)
  // and out-of-range entries are clamped (the count is queryable).
  SimilarityMatrix(int n, std::vector<double> entries);

  int size() const { return n_; }
  double at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  double row_sum(int i) const { return row_sums_[i]; }
  int clamped_entries() const { return clamped_; }

 private:
  int n_ = 0;
  std::vector<double> entries_;
  std::vector<double> row_sums_;
  int clamped_ = 0;
};

// s_ij = exp(-sigma^2 * (1 - cos(v_i, v_j))). Scaled copies of a vector get
// similarity exactly 1; orthogonal vectors exp(-sigma^2); antipodal ones
// exp(-2 sigma^2). Zero vectors and mismatched dimensions are errors.
SimilarityMatrix cosine_kernel(const std::vector<std::vector<double>>& vectors,
                               double sigma);

// f(S) = bias + sum of per-element weights. Keeping f non-negative on every
// queried set is the caller's job; the counting wrapper enforces it.
std::shared_ptr<const Objective> make_modular(std::vector<double> weights,
                                              double bias = 0.0);

// Weighted coverage: f(S) = total weight of the universe items covered by
// the union of the members' cover lists. Monotone.
std::shared_ptr<const Objective> make_coverage(
    std::vector<std::vector<int>> covers, std::vector<double> universe_weights);

// Undirected cut: f(S) = sum of w_ij over pairs with i in S, j not in S,
// each unordered edge counted once. weights must be symmetric with zero
// diagonal.
std::shared_ptr<const Objective> make_cut(int n, std::vector<double> weights);

// Coverage-minus-redundancy summarization score:
//   f(S) = (1/n) * (sum_{i in N} sum_{j in S} s_ij
//                   - lambda * sum_{i in S} sum_{j in S} s_ij).
// Non-negative for lambda <= 1. Supports O(1) incremental evaluation against
// a per-solution cache of column sums, which is what makes ground sets in the
// thousands practical.
std::shared_ptr<const Objective> make_diverse_summarization(
    std::shared_ptr<const SimilarityMatrix> similarity, double lambda);

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_H_
