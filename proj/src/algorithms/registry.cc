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

#include "consub/algorithms/registry.h"

#include <stdexcept>

#include "consub/algorithms/chasing_local_opt.h"
#include "consub/algorithms/encompassing_set.h"
#include "consub/algorithms/sieve_streaming.h"
#include "consub/algorithms/swapping.h"

namespace consub {

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> kNames = {
      "encompassing-set", "chasing-local-opt", "swapping",
      "sieve-streaming",  "offline-greedy",    "brute-force"};
  return kNames;
}

const std::vector<std::string>& StreamingAlgorithmNames() {
  static const std::vector<std::string> kNames = {
      "encompassing-set", "chasing-local-opt", "swapping", "sieve-streaming"};
  return kNames;
}

std::unique_ptr<StreamingAlgorithm> MakeAlgorithm(
    std::string_view name, const ValueOracle& oracle, std::size_t k,
    const AlgorithmParams& params) {
  if (name == "encompassing-set") {
    return std::make_unique<EncompassingSet>(
        oracle, k, EncompassingSetOptions{params.beta});
  }
  if (name == "chasing-local-opt") {
    return std::make_unique<ChasingLocalOpt>(
        oracle, k, ChasingLocalOptOptions{params.epsilon});
  }
  if (name == "swapping") return std::make_unique<Swapping>(oracle, k);
  if (name == "sieve-streaming") {
    return std::make_unique<SieveStreaming>(
        oracle, k, SieveStreamingOptions{params.epsilon});
  }
  if (name == "offline-greedy") {
    return std::make_unique<RecomputeGreedy>(oracle, k);
  }
  if (name == "brute-force") {
    return std::make_unique<RecomputeBruteForce>(oracle, k,
                                                 params.brute_force_cap);
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

}  // namespace consub
