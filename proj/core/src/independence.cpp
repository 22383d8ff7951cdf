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

#include "submax/independence.hpp"

#include <stdexcept>

namespace submax {

const char* to_string(SystemClass c) {
  return c == SystemClass::kExtendible ? "k-extendible" : "k-system";
}

CountedIndependence::CountedIndependence(
    std::shared_ptr<const IndependenceSystem> inner)
    : inner_(std::move(inner)) {
  if (!inner_) {
    throw std::invalid_argument("CountedIndependence: null system");
  }
}

std::pair<std::int64_t, std::int64_t> snapshot_counts(
    const CountedObjective& f, const CountedIndependence& indep) {
  return {f.calls(), indep.calls()};
}

}  // namespace submax
