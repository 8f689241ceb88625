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

#include "consub/algorithms/encompassing_set.h"

#include <cmath>
#include <stdexcept>

namespace consub {

EncompassingSet::EncompassingSet(const ValueOracle& oracle, std::size_t k,
                                 EncompassingSetOptions options)
    : StreamingAlgorithm(oracle, k),
      beta_(options.beta),
      benchmark_(oracle.NewEvaluator()),
      solution_(oracle.NewEvaluator()) {
  if (k == 0) throw std::invalid_argument("encompassing-set: k must be >= 1");
  if (!(beta_ > 0.0)) {
    throw std::invalid_argument("encompassing-set: beta must be > 0");
  }
}

std::map<std::string, double> EncompassingSet::params() const {
  return {{"beta", beta_}};
}

void EncompassingSet::Process(ElementId e) {
  const double threshold =
      beta_ / static_cast<double>(k()) * benchmark_->value();
  // Plain >=: with f(B) = 0 every arrival passes.
  if (benchmark_->Gain(e) >= threshold) {
    benchmark_->Add(e);
    solution_->Add(e);
    if (solution_->size() == k() + 1) {
      solution_->Remove(solution_->members().front());
    }
  }
}

std::uint64_t EncompassingSet::OracleCalls() const {
  return benchmark_->oracle_calls() + solution_->oracle_calls();
}

double EncompassingSetMultiplier(double beta, std::size_t k) {
  const double growth =
      std::pow(1.0 + beta / static_cast<double>(k), static_cast<double>(k));
  return (growth - 1.0) / (growth * (1.0 + beta));
}

}  // namespace consub
