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

#include "consub/algorithms/min_swap.h"

#include <stdexcept>
#include <string>

namespace consub {

SwapEvent MinSwapInPlace(SetEvaluator& solution, ElementId x, std::size_t k) {
  if (solution.Contains(x)) {
    throw std::invalid_argument("MinSwap: element " + std::to_string(Index(x)) +
                                " is already in the solution");
  }
  SwapEvent event;
  event.added = x;
  event.k = k;
  event.value_before = solution.value();
  if (solution.size() >= k && !solution.members().empty()) {
    const ElementSet members = solution.members();
    ElementId victim = members.front();
    double victim_loss = solution.Loss(victim);
    for (std::size_t i = 1; i < members.size(); ++i) {
      const double loss = solution.Loss(members[i]);
      if (loss < victim_loss) {
        victim = members[i];
        victim_loss = loss;
      }
    }
    solution.Remove(victim);
    event.removed = victim;
    event.removed_loss = victim_loss;
  }
  solution.Add(x);
  event.value_after = solution.value();
  return event;
}

ElementSet MinSwap(const ElementSet& s, ElementId x, const ValueOracle& oracle,
                   std::size_t k) {
  auto evaluator = oracle.NewEvaluator();
  evaluator->Assign(s);
  MinSwapInPlace(*evaluator, x, k);
  return evaluator->members();
}

}  // namespace consub
