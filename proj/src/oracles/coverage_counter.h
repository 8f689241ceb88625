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

// Shared incremental evaluator for coverage-type objectives (weighted
// coverage, dominating function). Keeps a multiplicity count per item, so
// gains, losses and removals cost O(|items(x)|).

#ifndef CONSUB_SRC_ORACLES_COVERAGE_COUNTER_H_
#define CONSUB_SRC_ORACLES_COVERAGE_COUNTER_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "consub/oracle.h"

namespace consub::internal {

class CoverageCounter : public SetEvaluator {
 public:
  using ItemsFn = std::function<std::span<const std::uint32_t>(ElementId)>;

  // `weights` == nullptr means unit weights.
  CoverageCounter(const ValueOracle& oracle, std::size_t item_count,
                  const std::vector<double>* weights, ItemsFn items)
      : SetEvaluator(oracle),
        weights_(weights),
        items_(std::move(items)),
        counts_(item_count, 0) {}

 protected:
  double ComputeGain(ElementId x) const override {
    double gain = 0.0;
    for (std::uint32_t item : items_(x)) {
      if (counts_[item] == 0) gain += Weight(item);
    }
    return gain;
  }

  double ComputeLoss(ElementId r) const override {
    double loss = 0.0;
    for (std::uint32_t item : items_(r)) {
      if (counts_[item] == 1) loss += Weight(item);
    }
    return loss;
  }

  double OnInsert(ElementId x) override {
    double gain = 0.0;
    for (std::uint32_t item : items_(x)) {
      if (counts_[item]++ == 0) gain += Weight(item);
    }
    return value() + gain;
  }

  double OnErase(ElementId r) override {
    double loss = 0.0;
    for (std::uint32_t item : items_(r)) {
      if (--counts_[item] == 0) loss += Weight(item);
    }
    return members().empty() ? 0.0 : value() - loss;
  }

  void OnClear() override { std::fill(counts_.begin(), counts_.end(), 0); }

 private:
  double Weight(std::uint32_t item) const {
    return weights_ == nullptr ? 1.0 : (*weights_)[item];
  }

  const std::vector<double>* weights_;
  ItemsFn items_;
  std::vector<std::uint32_t> counts_;
};

}  // namespace consub::internal

#endif  // CONSUB_SRC_ORACLES_COVERAGE_COUNTER_H_
