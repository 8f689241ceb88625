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

#include "consub/algorithms/swapping.h"

#include <stdexcept>

namespace consub {

Swapping::Swapping(const ValueOracle& oracle, std::size_t k)
    : StreamingAlgorithm(oracle, k),
      solution_(oracle.NewEvaluator()),
      weights_(oracle.ground_size(), 0.0),
      has_weight_(oracle.ground_size(), 0) {
  if (k == 0) throw std::invalid_argument("swapping: k must be >= 1");
}

std::optional<double> Swapping::stored_weight(ElementId e) const {
  if (Index(e) >= has_weight_.size() || !has_weight_[Index(e)]) {
    return std::nullopt;
  }
  return weights_[Index(e)];
}

void Swapping::Process(ElementId e) {
  const double w = solution_->Gain(e);
  weights_[Index(e)] = w;
  has_weight_[Index(e)] = 1;
  if (solution_->size() < k()) {
    solution_->Add(e);
    return;
  }
  const ElementSet& members = solution_->members();
  ElementId weakest = members.front();
  for (ElementId s : members) {
    if (weights_[Index(s)] < weights_[Index(weakest)]) weakest = s;
  }
  if (2.0 * weights_[Index(weakest)] <= w) {
    solution_->Remove(weakest);
    solution_->Add(e);
  }
}

}  // namespace consub
