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

#include "consub/oracle.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace consub {

void ValueOracle::ThrowDuplicate(ElementId e) const {
  throw std::invalid_argument(std::string(name()) + ": element " +
                              std::to_string(Index(e)) +
                              " appears twice in the set");
}

void ValueOracle::CheckId(ElementId e) const {
  if (Index(e) >= ground_size()) {
    throw std::invalid_argument(std::string(name()) + ": unknown element id " +
                                std::to_string(Index(e)));
  }
}

double ValueOracle::Eval(std::span<const ElementId> set) const {
  for (ElementId e : set) CheckId(e);
  if (set.size() <= 32) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (set[i] == set[j]) ThrowDuplicate(set[i]);
      }
    }
  } else {
    std::vector<ElementId> sorted(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) ThrowDuplicate(*dup);
  }
  if (set.empty()) return 0.0;
  return Evaluate(set);
}

std::unique_ptr<SetEvaluator> ValueOracle::NewEvaluator() const {
  return std::make_unique<OracleEvaluator>(*this);
}

double Marginal(const ValueOracle& oracle, ElementId x, const ElementSet& s,
                std::uint64_t* calls) {
  oracle.CheckId(x);
  if (s.Contains(x)) return 0.0;
  const double with = oracle.Eval(s.With(x));
  const double without = oracle.Eval(s);
  if (calls != nullptr) *calls += 2;
  return with - without;
}

void SetEvaluator::CheckId(ElementId e) const { oracle_.CheckId(e); }

double SetEvaluator::Gain(ElementId x) {
  CheckId(x);
  if (members_.Contains(x)) return 0.0;
  ++calls_;
  return ComputeGain(x);
}

double SetEvaluator::Loss(ElementId r) {
  if (!members_.Contains(r)) {
    throw std::invalid_argument("Loss: element " + std::to_string(Index(r)) +
                                " is not in the set");
  }
  ++calls_;
  return ComputeLoss(r);
}

void SetEvaluator::Add(ElementId x) {
  CheckId(x);
  if (!members_.Insert(x)) {
    throw std::invalid_argument("Add: element " + std::to_string(Index(x)) +
                                " is already in the set");
  }
  ++calls_;
  value_ = OnInsert(x);
}

void SetEvaluator::Remove(ElementId r) {
  if (!members_.Erase(r)) {
    throw std::invalid_argument("Remove: element " + std::to_string(Index(r)) +
                                " is not in the set");
  }
  ++calls_;
  value_ = OnErase(r);
}

void SetEvaluator::Assign(const ElementSet& s) {
  members_.Clear();
  value_ = 0.0;
  OnClear();
  for (ElementId e : s) Add(e);
}

double SetEvaluator::ComputeLoss(ElementId r) const {
  return value_ - oracle_.Eval(members_.Without(r));
}

double SetEvaluator::OnErase(ElementId /*r*/) {
  // Rebuild the accumulator from the remaining members.
  OnClear();
  double v = 0.0;
  value_ = 0.0;
  ElementSet remaining = members_;
  members_.Clear();
  for (ElementId e : remaining) {
    members_.Insert(e);
    v = OnInsert(e);
    value_ = v;
  }
  return v;
}

double OracleEvaluator::ComputeGain(ElementId x) const {
  return oracle().Eval(members().With(x)) - value();
}

double OracleEvaluator::OnInsert(ElementId /*x*/) {
  return oracle().Eval(members());
}

double OracleEvaluator::OnErase(ElementId /*r*/) {
  return oracle().Eval(members());
}

}  // namespace consub
