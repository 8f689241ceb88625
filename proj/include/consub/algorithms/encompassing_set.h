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

#ifndef CONSUB_ALGORITHMS_ENCOMPASSING_SET_H_
#define CONSUB_ALGORITHMS_ENCOMPASSING_SET_H_

#include <memory>

#include "consub/algorithms/streaming_algorithm.h"

namespace consub {

struct EncompassingSetOptions {
  double beta = 1.14;
};

// 1-consistent algorithm built around a growing benchmark set B.
//
// An arriving element e joins B when f(e | B) >= (beta / k) f(B). The
// solution is the window of the last k elements that joined B: every
// acceptance appends e and, at capacity, evicts the oldest window member.
// Rejected arrivals leave the state untouched.
//
// Guarantees, for every prefix t:
//   f(OPT_t) <= (1 + beta) f(B_t)
//   f(B_t) >= (1 + beta/k)^k f(B_t \ S_t)
//   f(S_t) >= ((1+beta/k)^k - 1) / ((1+beta/k)^k (1+beta)) f(OPT_t)
class EncompassingSet : public StreamingAlgorithm {
 public:
  EncompassingSet(const ValueOracle& oracle, std::size_t k,
                  EncompassingSetOptions options = {});

  std::string_view name() const override { return "encompassing-set"; }
  std::optional<std::size_t> consistency_bound() const override { return 1; }
  std::map<std::string, double> params() const override;

  const ElementSet& solution() const override { return solution_->members(); }
  double solution_value() const override { return solution_->value(); }

  const ElementSet& benchmark() const { return benchmark_->members(); }
  double benchmark_value() const { return benchmark_->value(); }
  double beta() const { return beta_; }

 protected:
  void Process(ElementId e) override;
  std::uint64_t OracleCalls() const override;

 private:
  double beta_;
  std::unique_ptr<SetEvaluator> benchmark_;
  std::unique_ptr<SetEvaluator> solution_;
};

// ((1+beta/k)^k - 1) / ((1+beta/k)^k (1+beta)): the fraction of f(OPT_t)
// that Encompassing-Set is guaranteed to keep.
double EncompassingSetMultiplier(double beta, std::size_t k);

}  // namespace consub

#endif  // CONSUB_ALGORITHMS_ENCOMPASSING_SET_H_
