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

#include "submax/objective.hpp"

#include <sstream>
#include <stdexcept>

namespace submax {
namespace {

constexpr double kNegativityTolerance = 1e-9;

}  // namespace

CountedObjective::CountedObjective(std::shared_ptr<const Objective> inner)
    : inner_(std::move(inner)) {
  if (!inner_) throw std::invalid_argument("CountedObjective: null objective");
}

double CountedObjective::record(double v, const ElementSet& s,
                                int changed) const {
  ++calls_;
  if (v < -kNegativityTolerance) {
    std::ostringstream msg;
    msg << "objective returned negative value " << v << " on set ";
    if (changed >= 0) {
      msg << s.to_string() << " changed by element " << changed;
    } else {
      msg << s.to_string();
    }
    throw std::runtime_error(msg.str());
  }
  return v;
}

double CountedObjective::value(const ElementSet& s) const {
  return record(inner_->value(s), s, -1);
}

SolutionState CountedObjective::start(const ElementSet& initial) const {
  SolutionState state;
  state.members_ = initial;
  state.value_ = record(inner_->value(initial), initial, -1);
  state.cache_ = inner_->make_cache(initial);
  return state;
}

SolutionState CountedObjective::start_like(const SolutionState& other) const {
  SolutionState state;
  state.members_ = other.members_;
  state.value_ = other.value_;
  state.cache_ = inner_->make_cache(other.members_);
  return state;
}

double CountedObjective::value_add(const SolutionState& state, int u) const {
  return record(inner_->value_add(state.cache_.get(), state.members_, u),
                state.members_, u);
}

double CountedObjective::value_remove(const SolutionState& state,
                                      int u) const {
  return record(inner_->value_remove(state.cache_.get(), state.members_, u),
                state.members_, u);
}

double CountedObjective::gain_add(const SolutionState& state, int u) const {
  double delta = inner_->delta_add(state.cache_.get(), state.members_, u);
  record(state.value_ + delta, state.members_, u);
  return delta;
}

void CountedObjective::push(SolutionState& state, int u,
                            double value_after) const {
  if (state.cache_) inner_->cache_add(state.cache_.get(), u);
  state.members_.insert(u);
  state.value_ = value_after;
}

void CountedObjective::pop(SolutionState& state, int u,
                           double value_after) const {
  if (state.cache_) inner_->cache_remove(state.cache_.get(), u);
  state.members_.erase(u);
  state.value_ = value_after;
}

double marginal_gain(const CountedObjective& f, int u, const ElementSet& s) {
  return f.value(s.with(u)) - f.value(s);
}

double marginal_gain(const CountedObjective& f, int u, const ElementSet& s,
                     double cached_value) {
  return f.value(s.with(u)) - cached_value;
}

SingletonScan scan_singletons(const CountedObjective& f, const GroundSet& n) {
  SingletonScan scan;
  scan.values.reserve(n.n);
  ElementSet singleton;
  for (int u = 0; u < n.n; ++u) {
    if (u > 0) singleton.erase(u - 1);
    singleton.insert(u);
    double v = f.value(singleton);
    scan.values.push_back(v);
    if (scan.best_element < 0 || v > scan.best_value) {
      scan.best_value = v;
      scan.best_element = u;
    }
  }
  if (scan.best_element < 0) scan.best_value = 0.0;
  return scan;
}

std::pair<double, int> max_singleton(const CountedObjective& f,
                                     const GroundSet& n) {
  SingletonScan scan = scan_singletons(f, n);
  return {scan.best_value, scan.best_element};
}

}  // namespace submax
