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

#ifndef CONSUB_ALGORITHMS_SWAPPING_H_
#define CONSUB_ALGORITHMS_SWAPPING_H_

#include <memory>
#include <optional>
#include <vector>

#include "consub/algorithms/streaming_algorithm.h"

namespace consub {

// Swapping baseline (4-approximation, 1-consistent).
//
// Each arrival e gets a weight w(e) = f(e | S) frozen at arrival time. Below
// capacity e is added. Otherwise the member s with the smallest stored weight
// (earliest inserted on ties) is replaced by e when 2 w(s) <= w(e).
class Swapping : public StreamingAlgorithm {
 public:
  Swapping(const ValueOracle& oracle, std::size_t k);

  std::string_view name() const override { return "swapping"; }
  std::optional<std::size_t> consistency_bound() const override { return 1; }

  const ElementSet& solution() const override { return solution_->members(); }
  double solution_value() const override { return solution_->value(); }

  // w(e) for an arrived element; nullopt before its arrival.
  std::optional<double> stored_weight(ElementId e) const;

 protected:
  void Process(ElementId e) override;
  std::uint64_t OracleCalls() const override {
    return solution_->oracle_calls();
  }

 private:
  std::unique_ptr<SetEvaluator> solution_;
  std::vector<double> weights_;
  std::vector<char> has_weight_;
};

}  // namespace consub

#endif  // CONSUB_ALGORITHMS_SWAPPING_H_
