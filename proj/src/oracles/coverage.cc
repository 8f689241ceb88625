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

#include "consub/oracles/coverage.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "oracles/coverage_counter.h"

namespace consub {

WeightedCoverageOracle::WeightedCoverageOracle(
    std::vector<double> item_weights,
    std::vector<std::vector<std::uint32_t>> element_items)
    : item_weights_(std::move(item_weights)),
      element_items_(std::move(element_items)) {
  for (double w : item_weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument(
          "coverage: item weights must be finite and >= 0");
    }
  }
  for (auto& items : element_items_) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    if (!items.empty() && items.back() >= item_weights_.size()) {
      throw std::invalid_argument("coverage: item index " +
                                  std::to_string(items.back()) +
                                  " out of range");
    }
  }
}

double WeightedCoverageOracle::Evaluate(std::span<const ElementId> set) const {
  std::vector<std::uint32_t> covered;
  for (ElementId e : set) {
    const auto& items = element_items_[Index(e)];
    covered.insert(covered.end(), items.begin(), items.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  double total = 0.0;
  for (std::uint32_t item : covered) total += item_weights_[item];
  return total;
}

std::unique_ptr<SetEvaluator> WeightedCoverageOracle::NewEvaluator() const {
  return std::make_unique<internal::CoverageCounter>(
      *this, item_weights_.size(), &item_weights_,
      [this](ElementId e) { return items(e); });
}

}  // namespace consub
