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

#ifndef CONSUB_ALGORITHMS_OFFLINE_H_
#define CONSUB_ALGORITHMS_OFFLINE_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "consub/algorithms/streaming_algorithm.h"

namespace consub {

inline constexpr std::uint64_t kDefaultBruteForceCap = 1000000;

// Standard greedy: min(k, |ground|) rounds, each adding the element of
// largest marginal gain (smallest id on ties). Returned in pick order.
ElementSet OfflineGreedy(const ValueOracle& oracle, const ElementSet& ground,
                         std::size_t k);

struct OptimumResult {
  ElementSet set;
  double value = 0.0;
};

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t r);

// Exact maximizer over all subsets of `ground` with at most k elements.
// Throws ResourceLimitError when C(|ground|, min(k, |ground|)) > cap.
OptimumResult BruteForceOpt(const ValueOracle& oracle, const ElementSet& ground,
                            std::size_t k,
                            std::uint64_t cap = kDefaultBruteForceCap);

// Streaming wrappers that recompute the offline answer on the arrived prefix
// after every insertion. They have no consistency guarantee and exist to
// serve as reference traces.
class RecomputeGreedy : public StreamingAlgorithm {
 public:
  RecomputeGreedy(const ValueOracle& oracle, std::size_t k)
      : StreamingAlgorithm(oracle, k) {}

  std::string_view name() const override { return "offline-greedy"; }
  std::optional<std::size_t> consistency_bound() const override {
    return std::nullopt;
  }
  const ElementSet& solution() const override { return solution_; }
  double solution_value() const override { return value_; }

 protected:
  void Process(ElementId e) override;
  std::uint64_t OracleCalls() const override { return calls_; }

 private:
  ElementSet arrived_;
  ElementSet solution_;
  double value_ = 0.0;
  std::uint64_t calls_ = 0;
};

class RecomputeBruteForce : public StreamingAlgorithm {
 public:
  RecomputeBruteForce(const ValueOracle& oracle, std::size_t k,
                      std::uint64_t cap = kDefaultBruteForceCap)
      : StreamingAlgorithm(oracle, k), cap_(cap) {}

  std::string_view name() const override { return "brute-force"; }
  std::optional<std::size_t> consistency_bound() const override {
    return std::nullopt;
  }
  const ElementSet& solution() const override { return solution_; }
  double solution_value() const override { return value_; }

 protected:
  void Process(ElementId e) override;
  std::uint64_t OracleCalls() const override { return calls_; }

 private:
  std::uint64_t cap_;
  ElementSet arrived_;
  ElementSet solution_;
  double value_ = 0.0;
  std::uint64_t calls_ = 0;
};

}  // namespace consub

#endif  // CONSUB_ALGORITHMS_OFFLINE_H_
