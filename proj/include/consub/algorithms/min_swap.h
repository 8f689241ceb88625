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

#ifndef CONSUB_ALGORITHMS_MIN_SWAP_H_
#define CONSUB_ALGORITHMS_MIN_SWAP_H_

#include <optional>

#include "consub/element_set.h"
#include "consub/oracle.h"

namespace consub {

// What one Min-Swap did to the solution.
struct SwapEvent {
  ElementId added{};
  std::optional<ElementId> removed;
  double removed_loss = 0.0;  // f(r | S - r), before the swap
  double value_before = 0.0;  // f(S)
  double value_after = 0.0;   // f(S - r + x)
  std::size_t k = 0;
};

// Inserts x into the evaluator's set. Below capacity x is simply added;
// at capacity the member r minimizing f(r | S - r) is evicted first (ties
// broken by insertion order). Averaging gives f(r | S - r) <= f(S) / k.
// Throws std::invalid_argument when x is already a member.
SwapEvent MinSwapInPlace(SetEvaluator& solution, ElementId x, std::size_t k);

// Value-level form: returns the set Min-Swap produces from S and x.
ElementSet MinSwap(const ElementSet& s, ElementId x, const ValueOracle& oracle,
                   std::size_t k);

}  // namespace consub

#endif  // CONSUB_ALGORITHMS_MIN_SWAP_H_
