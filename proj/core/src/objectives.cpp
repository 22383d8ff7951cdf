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

#include "submax/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace submax {

SimilarityMatrix::SimilarityMatrix(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 0 || entries_.size() != static_cast<size_t>(n_) * n_) {
    throw std::invalid_argument("similarity matrix: need n*n entries");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      double& upper = entries_[static_cast<size_t>(i) * n_ + j];
      double& lower = entries_[static_cast<size_t>(j) * n_ + i];
      if (std::abs(upper - lower) > 1e-9) {
        throw std::invalid_argument("similarity matrix: asymmetric at (" +
                                    std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
      lower = upper;
    }
  }
  for (double& s : entries_) {
    if (s < 0.0) {
      s = 0.0;
      ++clamped_;
    } else if (s > 1.0) {
      s = 1.0;
      ++clamped_;
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) <= 0.0) {
      throw std::invalid_argument("similarity matrix: non-positive diagonal");
    }
  }
  row_sums_.assign(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n_; ++j) sum += at(i, j);
    row_sums_[i] = sum;
  }
}

SimilarityMatrix cosine_kernel(const std::vector<std::vector<double>>& vectors,
                               double sigma) {
  if (sigma <= 0.0) {
    throw std::invalid_argument("cosine kernel: sigma must be positive");
  }
  int n = static_cast<int>(vectors.size());
  size_t dim = n > 0 ? vectors[0].size() : 0;
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) {
    if (vectors[i].size() != dim) {
      throw std::invalid_argument("cosine kernel: mismatched dimensions");
    }
    double sq = 0.0;
    for (double x : vectors[i]) sq += x * x;
    if (sq == 0.0) {
      throw std::invalid_argument("cosine kernel: zero vector at row " +
                                  std::to_string(i));
    }
    norms[i] = std::sqrt(sq);
  }
  std::vector<double> entries(static_cast<size_t>(n) * n, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dot = 0.0;
      for (size_t t = 0; t < dim; ++t) dot += vectors[i][t] * vectors[j][t];
      double cosine = std::clamp(dot / (norms[i] * norms[j]), -1.0, 1.0);
      double s = std::exp(-sigma * sigma * (1.0 - cosine));
      entries[static_cast<size_t>(i) * n + j] = s;
      entries[static_cast<size_t>(j) * n + i] = s;
    }
  }
  return SimilarityMatrix(n, std::move(entries));
}

namespace {

class ModularObjective : public Objective {
 public:
  ModularObjective(std::vector<double> weights, double bias)
      : weights_(std::move(weights)), bias_(bias) {}

  int ground_size() const override { return static_cast<int>(weights_.size()); }

  double value(const ElementSet& s) const override {
    double total = bias_;
    for (int e : s) total += weights_.at(e);
    return total;
  }

  double delta_add(const ObjectiveCache* cache, const ElementSet& s,
                   int u) const override {
    (void)cache;
    return s.contains(u) ? 0.0 : weights_.at(u);
  }

 private:
  std::vector<double> weights_;
  double bias_;
};

class CoverageObjective : public Objective {
 public:
  CoverageObjective(std::vector<std::vector<int>> covers,
                    std::vector<double> universe_weights)
      : covers_(std::move(covers)), weights_(std::move(universe_weights)) {
    for (const auto& list : covers_) {
      for (int item : list) {
        if (item < 0 || item >= static_cast<int>(weights_.size())) {
          throw std::invalid_argument("coverage: item outside universe");
        }
      }
    }
  }

  int ground_size() const override { return static_cast<int>(covers_.size()); }

  double value(const ElementSet& s) const override {
    std::vector<char> hit(weights_.size(), 0);
    double total = 0.0;
    for (int e : s) {
      for (int item : covers_.at(e)) {
        if (!hit[item]) {
          hit[item] = 1;
          total += weights_[item];
        }
      }
    }
    return total;
  }

  double delta_add(const ObjectiveCache* cache, const ElementSet& s,
                   int u) const override {
    (void)cache;
    std::vector<char> hit(weights_.size(), 0);
    for (int e : s) {
      for (int item : covers_.at(e)) hit[item] = 1;
    }
    double delta = 0.0;
    for (int item : covers_.at(u)) {
      if (!hit[item]) {
        hit[item] = 1;
        delta += weights_[item];
      }
    }
    return delta;
  }

 private:
  std::vector<std::vector<int>> covers_;
  std::vector<double> weights_;
};

class CutObjective : public Objective {
 public:
  CutObjective(int n, std::vector<double> weights)
      : n_(n), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<size_t>(n_) * n_) {
      throw std::invalid_argument("cut: need n*n weights");
    }
    for (int i = 0; i < n_; ++i) {
      if (at(i, i) != 0.0) {
        throw std::invalid_argument("cut: diagonal must be zero");
      }
      for (int j = i + 1; j < n_; ++j) {
        if (at(i, j) != at(j, i)) {
          throw std::invalid_argument("cut: weights must be symmetric");
        }
      }
    }
  }

  int ground_size() const override { return n_; }

  double value(const ElementSet& s) const override {
    std::vector<char> in(n_, 0);
    for (int e : s) in.at(e) = 1;
    double total = 0.0;
    for (int e : s) {
      for (int j = 0; j < n_; ++j) {
        if (!in[j]) total += at(e, j);
      }
    }
    return total;
  }

  double delta_add(const ObjectiveCache* cache, const ElementSet& s,
                   int u) const override {
    (void)cache;
    if (s.contains(u)) return 0.0;
    std::vector<char> in(n_, 0);
    for (int e : s) in.at(e) = 1;
    double delta = 0.0;
    for (int j = 0; j < n_; ++j) {
      if (j == u) continue;
      delta += in[j] ? -at(u, j) : at(u, j);
    }
    return delta;
  }

 private:
  double at(int i, int j) const { return weights_[static_cast<size_t>(i) * n_ + j]; }

  int n_;
  std::vector<double> weights_;
};

struct DiverseCache : ObjectiveCache {
  double coverage = 0.0;    // sum_{j in S} row_sum(j)
  double penalty = 0.0;     // sum_{i in S} sum_{j in S} s_ij
  std::vector<double> col;  // col[i] = sum_{j in S} s_ij
};

class DiverseSummarizationObjective : public Objective {
 public:
  DiverseSummarizationObjective(std::shared_ptr<const SimilarityMatrix> s,
                                double lambda)
      : s_(std::move(s)), lambda_(lambda) {
    if (!s_) throw std::invalid_argument("summarization: null similarity");
    if (lambda_ < 0.0 || lambda_ > 1.0) {
      throw std::invalid_argument("summarization: lambda outside [0, 1]");
    }
  }

  int ground_size() const override { return s_->size(); }

  double value(const ElementSet& set) const override {
    double coverage = 0.0, penalty = 0.0;
    for (int j : set) coverage += s_->row_sum(j);
    for (int i : set) {
      for (int j : set) penalty += s_->at(i, j);
    }
    return score(coverage, penalty);
  }

  std::unique_ptr<ObjectiveCache> make_cache(const ElementSet& set) const override {
    auto cache = std::make_unique<DiverseCache>();
    cache->col.assign(s_->size(), 0.0);
    for (int j : set) {
      cache->coverage += s_->row_sum(j);
      for (int i = 0; i < s_->size(); ++i) cache->col[i] += s_->at(i, j);
    }
    for (int j : set) cache->penalty += cache->col[j];
    return cache;
  }

  double value_add(const ObjectiveCache* cache, const ElementSet& set,
                   int u) const override {
    const auto* c = static_cast<const DiverseCache*>(cache);
    if (c == nullptr) return value(set.with(u));
    return score(c->coverage + s_->row_sum(u),
                 c->penalty + 2.0 * c->col[u] + s_->at(u, u));
  }

  double value_remove(const ObjectiveCache* cache, const ElementSet& set,
                      int u) const override {
    const auto* c = static_cast<const DiverseCache*>(cache);
    if (c == nullptr) return value(set.without(u));
    return score(c->coverage - s_->row_sum(u),
                 c->penalty - 2.0 * c->col[u] + s_->at(u, u));
  }

  double delta_add(const ObjectiveCache* cache, const ElementSet& set,
                   int u) const override {
    if (set.contains(u)) return 0.0;
    const auto* c = static_cast<const DiverseCache*>(cache);
    double col_u = 0.0;
    if (c != nullptr) {
      col_u = c->col[u];
    } else {
      for (int j : set) col_u += s_->at(u, j);
    }
    return score(s_->row_sum(u), 2.0 * col_u + s_->at(u, u));
  }

  void cache_add(ObjectiveCache* cache, int u) const override {
    auto* c = static_cast<DiverseCache*>(cache);
    c->coverage += s_->row_sum(u);
    c->penalty += 2.0 * c->col[u] + s_->at(u, u);
    for (int i = 0; i < s_->size(); ++i) c->col[i] += s_->at(i, u);
  }

  void cache_remove(ObjectiveCache* cache, int u) const override {
    auto* c = static_cast<DiverseCache*>(cache);
    c->coverage -= s_->row_sum(u);
    c->penalty -= 2.0 * c->col[u] - s_->at(u, u);
    for (int i = 0; i < s_->size(); ++i) c->col[i] -= s_->at(i, u);
  }

 private:
  double score(double coverage, double penalty) const {
    return (coverage - lambda_ * penalty) / s_->size();
  }

  std::shared_ptr<const SimilarityMatrix> s_;
  double lambda_;
};

}  // namespace

std::shared_ptr<const Objective> make_modular(std::vector<double> weights,
                                              double bias) {
  return std::make_shared<ModularObjective>(std::move(weights), bias);
}

std::shared_ptr<const Objective> make_coverage(
    std::vector<std::vector<int>> covers,
    std::vector<double> universe_weights) {
  return std::make_shared<CoverageObjective>(std::move(covers),
                                             std::move(universe_weights));
}

std::shared_ptr<const Objective> make_cut(int n, std::vector<double> weights) {
  return std::make_shared<CutObjective>(n, std::move(weights));
}

std::shared_ptr<const Objective> make_diverse_summarization(
    std::shared_ptr<const SimilarityMatrix> similarity, double lambda) {
  return std::make_shared<DiverseSummarizationObjective>(std::move(similarity),
                                                         lambda);
}

}  // namespace submax
