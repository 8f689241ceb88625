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

#ifndef CONSUB_ELEMENT_SET_H_
#define CONSUB_ELEMENT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace consub {

// Dense index of a ground element of a stream.
enum class ElementId : std::uint32_t {};

constexpr std::uint32_t Index(ElementId e) {
  return static_cast<std::uint32_t>(e);
}

// A set of elements that remembers the order in which members were inserted.
// The order matters: Encompassing-Set evicts the oldest member, and
// tie-breaking rules elsewhere refer to insertion order.
//
// Membership tests are linear; sets handled here hold at most a few hundred
// members.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  // Throws std::invalid_argument on duplicate ids.
  ElementSet(std::initializer_list<ElementId> ids);
  explicit ElementSet(std::vector<ElementId> ids);

  bool Contains(ElementId e) const;
  // Appends `e`; returns false (and leaves the set unchanged) if present.
  bool Insert(ElementId e);
  // Removes `e` keeping the relative order of the others.
  bool Erase(ElementId e);
  void Clear() { ids_.clear(); }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  ElementId operator[](std::size_t i) const { return ids_[i]; }
  ElementId front() const { return ids_.front(); }
  ElementId back() const { return ids_.back(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  std::span<const ElementId> ids() const { return ids_; }

  // Copy with `e` appended / removed.
  ElementSet With(ElementId e) const;
  ElementSet Without(ElementId e) const;

  // Membership ids in ascending order.
  std::vector<std::uint32_t> SortedIndices() const;
  std::string DebugString() const;

  // Set equality; insertion order is ignored.
  friend bool operator==(const ElementSet& a, const ElementSet& b);

 private:
  std::vector<ElementId> ids_;
};

}  // namespace consub

#endif  // CONSUB_ELEMENT_SET_H_
