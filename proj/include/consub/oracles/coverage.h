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

#ifndef CONSUB_ORACLES_COVERAGE_H_
#define CONSUB_ORACLES_COVERAGE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "consub/oracle.h"

namespace consub {

// f(S) = total weight of the items covered by the union of the elements of S.
// Each element covers a fixed list of items.
class WeightedCoverageOracle : public ValueOracle {
 public:
  // Item lists are de-duplicated. Weights must be finite and non-negative;
  // item indices must be < item_weights.size().
  WeightedCoverageOracle(std::vector<double> item_weights,
                         std::vector<std::vector<std::uint32_t>> element_items);

  std::string_view name() const override { return "weighted-coverage"; }
  std::size_t ground_size() const override { return element_items_.size(); }
  std::size_t item_count() const { return item_weights_.size(); }
  double item_weight(std::uint32_t item) const { return item_weights_[item]; }
  std::span<const std::uint32_t> items(ElementId e) const {
    return element_items_[Index(e)];
  }
  const std::vector<double>& item_weights() const { return item_weights_; }

  std::unique_ptr<SetEvaluator> NewEvaluator() const override;

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<double> item_weights_;
  std::vector<std::vector<std::uint32_t>> element_items_;
};

}  // namespace consub

#endif  // CONSUB_ORACLES_COVERAGE_H_
