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

#ifndef CONSUB_ALGORITHMS_CHASING_LOCAL_OPT_H_
#define CONSUB_ALGORITHMS_CHASING_LOCAL_OPT_H_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "consub/algorithms/min_swap.h"
#include "consub/algorithms/streaming_algorithm.h"

namespace consub {

// (1 + sqrt 5) / 2, evaluated in double precision.
double GoldenRatio();

// Swap budget N = ceil((1/eps) * log_phi(12/eps)).
std::size_t SwapBudget(double epsilon);

// True iff no x in `arrived` outside `solution` has f(x | S) > 0 and
// f(x | S) >= (phi/k) f(S). Evaluated from scratch.
bool IsLocalOptimum(const ValueOracle& oracle, const ElementSet& solution,
                    std::span<const ElementId> arrived, std::size_t k);

struct ChasingLocalOptOptions {
  double epsilon = 0.1;
};

// Local-search algorithm that keeps its solution close to a local optimum.
//
// On arrival of e: if f(e | S) >= (phi/k) f(S), Min-Swap e into S. Then run
// up to N repair rounds; each scans the arrived elements outside S in arrival
// order and Min-Swaps in the first x with f(x | S) >= (phi/k) f(S) and
// f(x | S) > 0. A round that finds no such x ends the step.
// Per-step additions are at most N + 1.
class ChasingLocalOpt : public StreamingAlgorithm {
 public:
  using SwapObserver = std::function<void(const SwapEvent&)>;

  ChasingLocalOpt(const ValueOracle& oracle, std::size_t k,
                  ChasingLocalOptOptions options = {});

  std::string_view name() const override { return "chasing-local-opt"; }
  std::optional<std::size_t> consistency_bound() const override {
    return swap_budget_ + 1;
  }
  std::map<std::string, double> params() const override;

  const ElementSet& solution() const override { return solution_->members(); }
  double solution_value() const override { return solution_->value(); }

  double epsilon() const { return epsilon_; }
  double phi() const { return phi_; }
  std::size_t swap_budget() const { return swap_budget_; }
  const std::vector<ElementId>& arrived() const { return arrived_; }
  // Repair rounds that performed a swap during the last step.
  std::size_t last_repair_swaps() const { return last_repair_swaps_; }
  // Whether the last step ended because a round found nothing to swap.
  bool last_step_converged() const { return last_step_converged_; }

  // True iff no arrived x has f(x | S) > 0 and f(x | S) >= (phi/k) f(S).
  // Evaluated from scratch through the oracle.
  bool IsLocalOptimum() const;

  // Called after every Min-Swap (arrival and repair rounds alike).
  void set_swap_observer(SwapObserver observer) {
    observer_ = std::move(observer);
  }

 protected:
  void Process(ElementId e) override;
  std::uint64_t OracleCalls() const override {
    return solution_->oracle_calls();
  }

 private:
  void Swap(ElementId x);

  double epsilon_;
  double phi_;
  std::size_t swap_budget_;
  std::unique_ptr<SetEvaluator> solution_;
  std::vector<ElementId> arrived_;
  std::size_t last_repair_swaps_ = 0;
  bool last_step_converged_ = true;
  SwapObserver observer_;
};

}  // namespace consub

#endif  // CONSUB_ALGORITHMS_CHASING_LOCAL_OPT_H_
