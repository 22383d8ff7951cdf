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

#include "submax/element_set.hpp"

#include <algorithm>
#include <sstream>

namespace submax {

ElementSet::ElementSet(std::initializer_list<int> ids)
    : ElementSet(std::vector<int>(ids)) {}

ElementSet::ElementSet(std::vector<int> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool ElementSet::contains(int u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

bool ElementSet::insert(int u) {
  auto it = std::lower_bound(members_.begin(), members_.end(), u);
  if (it != members_.end() && *it == u) return false;
  members_.insert(it, u);
  return true;
}

bool ElementSet::erase(int u) {
  auto it = std::lower_bound(members_.begin(), members_.end(), u);
  if (it == members_.end() || *it != u) return false;
  members_.erase(it);
  return true;
}

ElementSet ElementSet::with(int u) const {
  ElementSet copy = *this;
  copy.insert(u);
  return copy;
}

ElementSet ElementSet::without(int u) const {
  ElementSet copy = *this;
  copy.erase(u);
  return copy;
}

std::string ElementSet::to_string() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out << ", ";
    out << members_[i];
  }
  out << "}";
  return out.str();
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ElementSet(std::move(out));
}

}  // namespace submax
