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

#ifndef CONSUB_ALGORITHMS_SIEVE_STREAMING_H_
#define CONSUB_ALGORITHMS_SIEVE_STREAMING_H_

#include <map>
#include <memory>
#include <vector>

#include "consub/algorithms/streaming_algorithm.h"

namespace consub {

struct SieveStreamingOptions {
  double epsilon = 0.1;
};

// Sieve-Streaming baseline (not consistent).
//
// Tracks m = max_e f({e}) over arrivals and keeps one candidate per active
// threshold v = (1+eps)^j with m <= v <= 2 k m. Thresholds entering the
// window start with an empty candidate; those leaving it are dropped. An
// arrival joins candidate S_v (|S_v| < k) when
//   f(e | S_v) >= (v/2 - f(S_v)) / (k - |S_v|).
// The reported solution is the best candidate, ties going to the smaller
// threshold.
class SieveStreaming : public StreamingAlgorithm {
 public:
  SieveStreaming(const ValueOracle& oracle, std::size_t k,
                 SieveStreamingOptions options = {});

  std::string_view name() const override { return "sieve-streaming"; }
  std::optional<std::size_t> consistency_bound() const override {
    return std::nullopt;
  }
  std::map<std::string, double> params() const override;

  const ElementSet& solution() const override { return reported_; }
  double solution_value() const override { return reported_value_; }

  double max_singleton() const { return max_singleton_; }
  // Active thresholds in increasing order.
  std::vector<double> thresholds() const;
  double Threshold(int exponent) const;

 protected:
  void Process(ElementId e) override;
  std::uint64_t OracleCalls() const override;

 private:
  void RefreshWindow();

  double epsilon_;
  double max_singleton_ = 0.0;
  // Candidates keyed by threshold exponent j.
  std::map<int, std::unique_ptr<SetEvaluator>> candidates_;
  ElementSet reported_;
  double reported_value_ = 0.0;
  std::uint64_t singleton_calls_ = 0;
  std::uint64_t retired_calls_ = 0;
};

}  // namespace consub

#endif  // CONSUB_ALGORITHMS_SIEVE_STREAMING_H_
