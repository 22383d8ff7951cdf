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

#ifndef SUBMAX_INDEPENDENCE_H_
#define SUBMAX_INDEPENDENCE_H_

#include <cstdint>
#include <memory>
#include <utility>

#include "submax/element_set.hpp"
#include "submax/objective.hpp"

namespace submax {

// How tightly a down-closed independence family is classified. A p-extendible
// family is also a p-system, so kExtendible is the stronger claim.
enum class SystemClass { kSystem, kExtendible };

const char* to_string(SystemClass c);

// Down-closed family of independent sets over dense ids 0..n-1. can_add is
// the primary oracle and may assume its input set is independent;
// is_independent exists for validation paths (brute force, class checks).
class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;

  virtual bool can_add(const ElementSet& s, int u) const = 0;
  virtual bool is_independent(const ElementSet& s) const = 0;

  int ground_size() const { return ground_size_; }
  SystemClass declared_class() const { return declared_class_; }
  int declared_k() const { return declared_k_; }

 protected:
  IndependenceSystem(int ground_size, SystemClass c, int k)
      : ground_size_(ground_size), declared_class_(c), declared_k_(k) {}

 private:
  int ground_size_;
  SystemClass declared_class_;
  int declared_k_;
};

// Counting wrapper; every can_add or is_independent query increments the
// independence-call counter by one.
class CountedIndependence {
 public:
  explicit CountedIndependence(std::shared_ptr<const IndependenceSystem> inner);

  const IndependenceSystem& inner() const { return *inner_; }
  std::int64_t calls() const { return calls_; }
  int ground_size() const { return inner_->ground_size(); }
  SystemClass declared_class() const { return inner_->declared_class(); }
  int declared_k() const { return inner_->declared_k(); }

  bool can_add(const ElementSet& s, int u) const {
    ++calls_;
    return inner_->can_add(s, u);
  }
  bool is_independent(const ElementSet& s) const {
    ++calls_;
    return inner_->is_independent(s);
  }

 private:
  std::shared_ptr<const IndependenceSystem> inner_;
  mutable std::int64_t calls_ = 0;
};

// (value calls so far, independence calls so far).
std::pair<std::int64_t, std::int64_t> snapshot_counts(
    const CountedObjective& f, const CountedIndependence& indep);

}  // namespace submax

#endif  // SUBMAX_INDEPENDENCE_H_
