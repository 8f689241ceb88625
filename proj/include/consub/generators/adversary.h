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

#ifndef CONSUB_GENERATORS_ADVERSARY_H_
#define CONSUB_GENERATORS_ADVERSARY_H_

#include <functional>
#include <memory>

#include "consub/algorithms/streaming_algorithm.h"
#include "consub/generators/instance.h"

namespace consub {

using AlgorithmFactory = std::function<std::unique_ptr<StreamingAlgorithm>(
    const ValueOracle& oracle, std::size_t k)>;

struct AdversaryResult {
  RunTrace trace;
  // The adaptively built instance (2k singletons, then one k-set).
  Instance instance;
  ElementSet singletons_kept;  // solution after the n singletons
  double final_value = 0.0;
  double opt_value = 0.0;  // 2k - 1
  double ratio = 0.0;      // opt_value / final_value (inf when 0)
};

// Adaptive covering adversary against a deterministic algorithm. Items
// g_1..g_2k; the stream is the singletons {g_1}, ..., {g_2k} followed by one
// k-set containing the items of the singletons the algorithm holds at that
// point, padded with the smallest-index uncovered items. The optimum after
// the last insertion is 2k - 1.
//
// The algorithm is built twice through `factory` (once to observe it, once
// on the final oracle) and must behave identically on the common prefix;
// otherwise, or if it ever holds more than k elements, ContractViolation is
// thrown.
AdversaryResult RunLowerBoundAdversary(const AlgorithmFactory& factory,
                                       std::size_t k);

// (2k - 1) / (k + c).
double LowerBoundRatio(std::size_t k, std::size_t c);

}  // namespace consub

#endif  // CONSUB_GENERATORS_ADVERSARY_H_
