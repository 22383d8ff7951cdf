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

#ifndef SUBMAX_OBJECTIVE_H_
#define SUBMAX_OBJECTIVE_H_

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"

namespace submax {

// Opaque per-solution scratch state. Objectives that support incremental
// evaluation derive from this; the algorithms own one instance per live
// solution and never look inside.
class ObjectiveCache {
 public:
  virtual ~ObjectiveCache() = default;
};

// A set function f: 2^N -> R>=0. Implementations must be pure: the value of a
// set never depends on the query history. value_add/value_remove are hooks
// for O(1)-ish evaluation of f(S+u) and f(S-u) against a cache built for S;
// the defaults fall back to a from-scratch evaluation.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual int ground_size() const = 0;
  virtual double value(const ElementSet& s) const = 0;

  virtual std::unique_ptr<ObjectiveCache> make_cache(
      const ElementSet& s) const {
    (void)s;
    return nullptr;
  }
  virtual double value_add(const ObjectiveCache* cache, const ElementSet& s,
                           int u) const {
    (void)cache;
    return value(s.with(u));
  }
  virtual double value_remove(const ObjectiveCache* cache, const ElementSet& s,
                              int u) const {
    (void)cache;
    return value(s.without(u));
  }
  // f(S+u) - f(S) as a single rounded quantity. Greedy rules compare gains
  // taken against different sets, so the delta must not be recovered by
  // subtracting two accumulated values: that rounds the same marginal
  // differently per history and can flip ties. Overrides sum the delta's own
  // terms in a fixed order; the default falls back to subtraction.
  virtual double delta_add(const ObjectiveCache* cache, const ElementSet& s,
                           int u) const {
    (void)cache;
    return value(s.with(u)) - value(s);
  }
  virtual void cache_add(ObjectiveCache* cache, int u) const { (void)cache, (void)u; }
  virtual void cache_remove(ObjectiveCache* cache, int u) const { (void)cache, (void)u; }
};

// A live candidate solution: its members, the cached value f(members), and
// the objective's incremental scratch state. Owned by a running algorithm so
// that a marginal gain costs a single value-oracle call.
class SolutionState {
 public:
  const ElementSet& members() const { return members_; }
  double value() const { return value_; }

 private:
  friend class CountedObjective;
  ElementSet members_;
  double value_ = 0.0;
  std::unique_ptr<ObjectiveCache> cache_;
};

// Counting wrapper around an Objective. Every evaluation of f on some set
// (value, value_add, value_remove, start) increments the call counter by one.
// Observing f(S) < 0 beyond a small tolerance is a contract violation and
// throws with the offending set named.
class CountedObjective {
 public:
  explicit CountedObjective(std::shared_ptr<const Objective> inner);

  const Objective& inner() const { return *inner_; }
  int ground_size() const { return inner_->ground_size(); }
  std::int64_t calls() const { return calls_; }

  double value(const ElementSet& s) const;

  // Evaluates f(initial) (one call) and builds the incremental state.
  SolutionState start(const ElementSet& initial) const;
  // Clones bookkeeping from an evaluated state without an oracle call.
  SolutionState start_like(const SolutionState& other) const;

  double value_add(const SolutionState& state, int u) const;     // f(S+u)
  double value_remove(const SolutionState& state, int u) const;  // f(S-u)

  // f(S+u) - f(S) via Objective::delta_add: one call, and the returned delta
  // for a given u shrinks monotonically as S grows, even in floating point.
  // Pair with push(state, u, state.value() + gain) to commit.
  double gain_add(const SolutionState& state, int u) const;

  // Commit u into / out of a state. value_after must be the result of the
  // matching value_add/value_remove call, so no oracle query is needed.
  void push(SolutionState& state, int u, double value_after) const;
  void pop(SolutionState& state, int u, double value_after) const;

 private:
  double record(double v, const ElementSet& s, int changed) const;

  std::shared_ptr<const Objective> inner_;
  mutable std::int64_t calls_ = 0;
};

// f(S+u) - f(S). Exactly two value calls, or one when f(S) is supplied.
double marginal_gain(const CountedObjective& f, int u, const ElementSet& s);
double marginal_gain(const CountedObjective& f, int u, const ElementSet& s,
                     double cached_value);

struct SingletonScan {
  double best_value = 0.0;  // max_u f({u}); 0 on an empty ground set
  int best_element = -1;    // lowest-id argmax, -1 on an empty ground set
  std::vector<double> values;
};

// Evaluates every singleton in ascending id order: exactly n value calls.
SingletonScan scan_singletons(const CountedObjective& f, const GroundSet& n);

// (max_u f({u}), argmax); ties go to the lowest element id.
std::pair<double, int> max_singleton(const CountedObjective& f,
                                     const GroundSet& n);

}  // namespace submax

#endif  // SUBMAX_OBJECTIVE_H_
