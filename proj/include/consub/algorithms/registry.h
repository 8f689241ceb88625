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

#ifndef CONSUB_ALGORITHMS_REGISTRY_H_
#define CONSUB_ALGORITHMS_REGISTRY_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "consub/algorithms/offline.h"
#include "consub/algorithms/streaming_algorithm.h"

namespace consub {

struct AlgorithmParams {
  double beta = 1.14;
  double epsilon = 0.1;
  std::uint64_t brute_force_cap = kDefaultBruteForceCap;
};

// Canonical names, in the order the harness reports them.
const std::vector<std::string>& AlgorithmNames();

// The four streaming algorithms (the offline references excluded).
const std::vector<std::string>& StreamingAlgorithmNames();

// Builds the algorithm registered under `name`. Throws std::invalid_argument
// for unknown names.
std::unique_ptr<StreamingAlgorithm> MakeAlgorithm(
    std::string_view name, const ValueOracle& oracle, std::size_t k,
    const AlgorithmParams& params = {});

}  // namespace consub

#endif  // CONSUB_ALGORITHMS_REGISTRY_H_
