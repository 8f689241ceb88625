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

#ifndef CONSUB_ORACLES_MODULAR_H_
#define CONSUB_ORACLES_MODULAR_H_

#include <vector>

#include "consub/oracle.h"

namespace consub {

// Additive function f(S) = sum of per-element weights.
class ModularOracle : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> weights);

  std::string_view name() const override { return "modular"; }
  std::size_t ground_size() const override { return weights_.size(); }
  double weight(ElementId e) const { return weights_[Index(e)]; }

  std::unique_ptr<SetEvaluator> NewEvaluator() const override;

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<double> weights_;
};

}  // namespace consub

#endif  // CONSUB_ORACLES_MODULAR_H_
