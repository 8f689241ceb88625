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

#include "consub/oracles/modular.h"

#include <cmath>
#include <stdexcept>

namespace consub {

namespace {

class ModularEvaluator : public SetEvaluator {
 public:
  explicit ModularEvaluator(const ModularOracle& oracle)
      : SetEvaluator(oracle), modular_(oracle) {}

 protected:
  double ComputeGain(ElementId x) const override { return modular_.weight(x); }
  double ComputeLoss(ElementId r) const override { return modular_.weight(r); }
  double OnInsert(ElementId x) override { return value() + modular_.weight(x); }
  double OnErase(ElementId r) override {
    return members().empty() ? 0.0 : value() - modular_.weight(r);
  }
  void OnClear() override {}

 private:
  const ModularOracle& modular_;
};

}  // namespace

ModularOracle::ModularOracle(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("modular: weights must be finite and >= 0");
    }
  }
}

double ModularOracle::Evaluate(std::span<const ElementId> set) const {
  double total = 0.0;
  for (ElementId e : set) total += weights_[Index(e)];
  return total;
}

std::unique_ptr<SetEvaluator> ModularOracle::NewEvaluator() const {
  return std::make_unique<ModularEvaluator>(*this);
}

}  // namespace consub
