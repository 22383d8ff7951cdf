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

#ifndef SUBMAX_REPORT_H_
#define SUBMAX_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "submax/element_set.hpp"

namespace submax {

// One set inspected by the final argmax of a run.
struct Candidate {
  std::string label;
  ElementSet set;
  double value = 0.0;
};

// The outcome of a single algorithm run. `value` is f(solution) recomputed on
// the raw objective after the run; `solution` always appears among
// `candidates`. `knapsack_rejected` is set only when knapsack constraints
// were present: true iff some element passed the gain gate but was refused
// for exceeding a budget.
struct RunReport {
  std::string algorithm;
  std::map<std::string, std::string> params;
  ElementSet solution;
  double value = 0.0;
  std::int64_t value_calls = 0;
  std::int64_t independence_calls = 0;
  std::optional<bool> knapsack_rejected;
  std::vector<Candidate> candidates;
};

// "a=1;b=2" with keys in map order. Deterministic, CSV-safe (no commas).
std::string format_params(const std::map<std::string, std::string>& params);

// Shortest-ish fixed formatting used everywhere a double becomes text.
std::string format_double(double v);

}  // namespace submax

#endif  // SUBMAX_REPORT_H_
