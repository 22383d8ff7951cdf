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

#ifndef SUBMAX_ELEMENT_SET_H_
#define SUBMAX_ELEMENT_SET_H_

#include <initializer_list>
#include <string>
#include <vector>

namespace submax {

// Ground set with dense element ids 0..n-1.
struct GroundSet {
  int n = 0;
  bool contains(int u) const { return u >= 0 && u < n; }
};

// A set of element ids, stored sorted ascending. Iteration order is the id
// order, which every deterministic tie-break in this library relies on.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<int> ids);
  explicit ElementSet(std::vector<int> ids);  // sorts and dedups

  bool contains(int u) const;
  // Insert/erase keep the members sorted. Return false when a no-op.
  bool insert(int u);
  bool erase(int u);

  ElementSet with(int u) const;
  ElementSet without(int u) const;

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }

  std::vector<int>::const_iterator begin() const { return members_.begin(); }
  std::vector<int>::const_iterator end() const { return members_.end(); }

  bool operator==(const ElementSet& other) const = default;

  std::string to_string() const;  // "{0, 3, 7}"

 private:
  std::vector<int> members_;
};

// Lexicographic order on the sorted member lists; a strict prefix sorts first.
bool lex_less(const ElementSet& a, const ElementSet& b);

bool is_subset(const ElementSet& a, const ElementSet& b);

ElementSet set_difference(const ElementSet& a, const ElementSet& b);

}  // namespace submax

#endif  // SUBMAX_ELEMENT_SET_H_
