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

#include "consub/algorithms/chasing_local_opt.h"

#include <cmath>
#include <stdexcept>

namespace consub {

double GoldenRatio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

std::size_t SwapBudget(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const double log_phi = std::log(12.0 / epsilon) / std::log(GoldenRatio());
  return static_cast<std::size_t>(std::ceil(log_phi / epsilon));
}

ChasingLocalOpt::ChasingLocalOpt(const ValueOracle& oracle, std::size_t k,
                                 ChasingLocalOptOptions options)
    : StreamingAlgorithm(oracle, k),
      epsilon_(options.epsilon),
      phi_(GoldenRatio()),
      swap_budget_(SwapBudget(options.epsilon)),
      solution_(oracle.NewEvaluator()) {
  if (k == 0) throw std::invalid_argument("chasing-local-opt: k must be >= 1");
}

std::map<std::string, double> ChasingLocalOpt::params() const {
  return {{"epsilon", epsilon_},
          {"phi", phi_},
          {"swap_budget", static_cast<double>(swap_budget_)}};
}

void ChasingLocalOpt::Swap(ElementId x) {
  const SwapEvent event = MinSwapInPlace(*solution_, x, k());
  if (observer_) observer_(event);
}

void ChasingLocalOpt::Process(ElementId e) {
  arrived_.push_back(e);
  const double kd = static_cast<double>(k());
  if (solution_->Gain(e) >= phi_ / kd * solution_->value()) Swap(e);

  last_repair_swaps_ = 0;
  last_step_converged_ = false;
  for (std::size_t round = 0; round < swap_budget_; ++round) {
    const double threshold = phi_ / kd * solution_->value();
    bool swapped = false;
    for (ElementId x : arrived_) {
      if (solution_->Contains(x)) continue;
      const double gain = solution_->Gain(x);
      if (gain > 0.0 && gain >= threshold) {
        Swap(x);
        swapped = true;
        break;
      }
    }
    if (!swapped) {
      last_step_converged_ = true;
      break;
    }
    ++last_repair_swaps_;
  }
}

bool IsLocalOptimum(const ValueOracle& oracle, const ElementSet& solution,
                    std::span<const ElementId> arrived, std::size_t k) {
  const double fs = oracle.Eval(solution);
  const double threshold = GoldenRatio() / static_cast<double>(k) * fs;
  for (ElementId x : arrived) {
    if (solution.Contains(x)) continue;
    const double gain = oracle.Eval(solution.With(x)) - fs;
    if (gain > 0.0 && gain >= threshold) return false;
  }
  return true;
}

bool ChasingLocalOpt::IsLocalOptimum() const {
  return consub::IsLocalOptimum(oracle(), solution(), arrived_, k());
}

}  // namespace consub
