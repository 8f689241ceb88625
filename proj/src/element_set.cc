// Copyright 2026 The Authors.
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

#include "consub/element_set.h"

#include <algorithm>
#include <stdexcept>

namespace consub {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(std::vector<ElementId>(ids)) {}

ElementSet::ElementSet(std::vector<ElementId> ids) {
  ids_.reserve(ids.size());
  for (ElementId e : ids) {
    if (!Insert(e)) {
      throw std::invalid_argument("duplicate element id " +
                                  std::to_string(Index(e)));
    }
  }
}

bool ElementSet::Contains(ElementId e) const {
  return std::find(ids_.begin(), ids_.end(), e) != ids_.end();
}

bool ElementSet::Insert(ElementId e) {
  if (Contains(e)) return false;
  ids_.push_back(e);
  return true;
}

bool ElementSet::Erase(ElementId e) {
  auto it = std::find(ids_.begin(), ids_.end(), e);
  if (it == ids_.end()) return false;
  ids_.erase(it);
  return true;
}

ElementSet ElementSet::With(ElementId e) const {
  ElementSet copy = *this;
  copy.Insert(e);
  return copy;
}

ElementSet ElementSet::Without(ElementId e) const {
  ElementSet copy = *this;
  copy.Erase(e);
  return copy;
}

std::vector<std::uint32_t> ElementSet::SortedIndices() const {
  std::vector<std::uint32_t> out;
  out.reserve(ids_.size());
  for (ElementId e : ids_) out.push_back(Index(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ElementSet::DebugString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(Index(ids_[i]));
  }
  return out + "}";
}

bool operator==(const ElementSet& a, const ElementSet& b) {
  return a.size() == b.size() && a.SortedIndices() == b.SortedIndices();
}

}  // namespace consub
