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

#include "submax/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace submax {

KnapsackSet::KnapsackSet(std::vector<std::vector<double>> costs,
                         std::vector<double> budgets) {
  if (costs.size() != budgets.size()) {
    throw std::invalid_argument("KnapsackSet: one budget per cost vector");
  }
  costs_ = std::move(costs);
  ground_size_ = costs_.empty() ? 0 : static_cast<int>(costs_[0].size());
  for (size_t r = 0; r < costs_.size(); ++r) {
    if (static_cast<int>(costs_[r].size()) != ground_size_) {
      throw std::invalid_argument("KnapsackSet: ragged cost vectors");
    }
    if (budgets[r] <= 0.0) {
      throw std::invalid_argument("KnapsackSet: budget must be positive");
    }
    for (double& c : costs_[r]) {
      if (c < 0.0) {
        throw std::invalid_argument("KnapsackSet: negative cost");
      }
      c /= budgets[r];
    }
  }
  for (int u = 0; u < ground_size_; ++u) {
    if (!singleton_feasible(u)) dropped_.push_back(u);
  }
}

double KnapsackSet::total_cost(int u) const {
  double total = 0.0;
  for (const auto& row : costs_) total += row[u];
  return total;
}

bool KnapsackSet::singleton_feasible(int u) const {
  for (const auto& row : costs_) {
    if (row[u] > 1.0 + kKnapsackTolerance) return false;
  }
  return true;
}

bool knapsack_can_add(const KnapsackSet& sacks, std::span<const double> totals,
                      int u) {
  for (int r = 0; r < sacks.num_knapsacks(); ++r) {
    if (totals[r] + sacks.cost(r, u) > 1.0 + kKnapsackTolerance) return false;
  }
  return true;
}

namespace {

class CardinalitySystem : public IndependenceSystem {
 public:
  CardinalitySystem(int ground_size, int limit)
      : IndependenceSystem(ground_size, SystemClass::kExtendible, 1),
        limit_(limit) {
    if (limit < 0) throw std::invalid_argument("cardinality: negative limit");
  }

  bool can_add(const ElementSet& s, int u) const override {
    (void)u;
    return s.size() + 1 <= limit_;
  }
  bool is_independent(const ElementSet& s) const override {
    return s.size() <= limit_;
  }

 private:
  int limit_;
};

class PartitionLimitSystem : public IndependenceSystem {
 public:
  PartitionLimitSystem(std::vector<std::vector<int>> groups,
                       std::vector<int> limits, int declared_k)
      : IndependenceSystem(
            static_cast<int>(groups.size()), SystemClass::kExtendible,
            declared_k > 0 ? declared_k : static_cast<int>(limits.size())),
        groups_(std::move(groups)),
        limits_(std::move(limits)) {
    for (const auto& labels : groups_) {
      for (int g : labels) {
        if (g < 0 || g >= static_cast<int>(limits_.size())) {
          throw std::invalid_argument("partition limit: unknown label " +
                                      std::to_string(g));
        }
      }
    }
    for (int d : limits_) {
      if (d < 0) throw std::invalid_argument("partition limit: negative limit");
    }
  }

  bool can_add(const ElementSet& s, int u) const override {
    for (int g : groups_[u]) {
      int count = 1;
      for (int e : s) {
        if (in_group(e, g)) ++count;
      }
      if (count > limits_[g]) return false;
    }
    return true;
  }

  bool is_independent(const ElementSet& s) const override {
    std::vector<int> counts(limits_.size(), 0);
    for (int e : s) {
      for (int g : groups_[e]) {
        if (++counts[g] > limits_[g]) return false;
      }
    }
    return true;
  }

 private:
  bool in_group(int e, int g) const {
    const auto& labels = groups_[e];
    return std::find(labels.begin(), labels.end(), g) != labels.end();
  }

  std::vector<std::vector<int>> groups_;
  std::vector<int> limits_;
};

class IntervalSeparationSystem : public IndependenceSystem {
 public:
  IntervalSeparationSystem(std::vector<int> keys, int gap)
      : IndependenceSystem(static_cast<int>(keys.size()),
                           SystemClass::kExtendible, 2),
        keys_(std::move(keys)),
        gap_(gap) {
    if (gap < 1) throw std::invalid_argument("interval separation: gap < 1");
  }

  bool can_add(const ElementSet& s, int u) const override {
    for (int e : s) {
      if (e != u && std::abs(keys_[e] - keys_[u]) < gap_) return false;
    }
    return true;
  }

  bool is_independent(const ElementSet& s) const override {
    const auto& m = s.members();
    for (size_t i = 0; i < m.size(); ++i) {
      for (size_t j = i + 1; j < m.size(); ++j) {
        if (std::abs(keys_[m[i]] - keys_[m[j]]) < gap_) return false;
      }
    }
    return true;
  }

 private:
  std::vector<int> keys_;
  int gap_;
};

class IntersectionSystem : public IndependenceSystem {
 public:
  IntersectionSystem(std::vector<std::shared_ptr<const IndependenceSystem>> parts,
                     int ground_size, SystemClass c, int k)
      : IndependenceSystem(ground_size, c, k), parts_(std::move(parts)) {}

  bool can_add(const ElementSet& s, int u) const override {
    for (const auto& part : parts_) {
      if (!part->can_add(s, u)) return false;
    }
    return true;
  }

  bool is_independent(const ElementSet& s) const override {
    for (const auto& part : parts_) {
      if (!part->is_independent(s)) return false;
    }
    return true;
  }

 private:
  std::vector<std::shared_ptr<const IndependenceSystem>> parts_;
};

// Exact integer feasibility for the structured hard family. With q = h/(2k)
// the charge knee sits at m/q, so:
//   x*q <= m            ->  feasible iff x + rest <= m
//   x*q >  m            ->  feasible iff q*x + k*q*rest <= m*(k*q - k + 1)
// (the second line is g(x) + rest <= m scaled by k*q; all terms integer).
class HardnessSystem : public IndependenceSystem {
 public:
  HardnessSystem(int k, int h, int m)
      : IndependenceSystem(h * k * m, SystemClass::kExtendible, k),
        k_(k),
        m_(m),
        q_(h / (2 * k)),
        group_size_(k * m) {}

  bool can_add(const ElementSet& s, int u) const override {
    ElementSet grown = s.with(u);
    return is_independent(grown);
  }

  bool is_independent(const ElementSet& s) const override {
    std::int64_t x = 0, rest = 0;
    for (int e : s) {
      (e < group_size_ ? x : rest) += 1;
    }
    if (x * q_ <= m_) return x + rest <= m_;
    return q_ * x + static_cast<std::int64_t>(k_) * q_ * rest <=
           static_cast<std::int64_t>(m_) * (static_cast<std::int64_t>(k_) * q_ - k_ + 1);
  }

 private:
  int k_, m_;
  std::int64_t q_;
  int group_size_;
};

}  // namespace

std::shared_ptr<const IndependenceSystem> build_cardinality(int ground_size,
                                                            int limit) {
  return std::make_shared<CardinalitySystem>(ground_size, limit);
}

std::shared_ptr<const IndependenceSystem> build_partition_limit(
    std::vector<std::vector<int>> groups, std::vector<int> limits,
    int declared_k) {
  return std::make_shared<PartitionLimitSystem>(std::move(groups),
                                                std::move(limits), declared_k);
}

std::shared_ptr<const IndependenceSystem> build_interval_separation(
    std::vector<int> keys, int gap) {
  return std::make_shared<IntervalSeparationSystem>(std::move(keys), gap);
}

std::shared_ptr<const IndependenceSystem> build_intersection(
    std::vector<std::shared_ptr<const IndependenceSystem>> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("intersection: no parts given");
  }
  int n = parts[0]->ground_size();
  SystemClass c = SystemClass::kExtendible;
  int k = 0;
  for (const auto& part : parts) {
    if (!part || part->ground_size() != n) {
      throw std::invalid_argument("intersection: mismatched ground sets");
    }
    if (part->declared_class() == SystemClass::kSystem) c = SystemClass::kSystem;
    k += part->declared_k();
  }
  return std::make_shared<IntersectionSystem>(std::move(parts), n, c, k);
}

double g_eval(double x, int k, int h, int m) {
  if (k < 1 || m < 1 || h < 2 * k || h % (2 * k) != 0) {
    throw std::invalid_argument("g_eval: h must be a positive multiple of 2k");
  }
  double knee = 2.0 * k * m / h;
  return std::min(x, knee) + std::max((x - knee) / k, 0.0);
}

std::shared_ptr<const IndependenceSystem> build_hardness_system(int k, int h,
                                                                int m) {
  if (k < 1 || m < 1 || h < 2 * k || h % (2 * k) != 0) {
    throw std::invalid_argument(
        "hardness system: h must be a positive multiple of 2k");
  }
  return std::make_shared<HardnessSystem>(k, h, m);
}

double hardness_max_independent_size(int k, int h, int m) {
  double knee = 2.0 * k * m / h;
  return k * (m - knee) + knee;
}

}  // namespace submax
