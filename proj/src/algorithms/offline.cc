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

#include "consub/algorithms/offline.h"

#include <algorithm>
#include <limits>
#include <string>

#include "consub/errors.h"

namespace consub {

namespace {

struct GreedyOutput {
  ElementSet set;
  double value = 0.0;
  std::uint64_t calls = 0;
};

GreedyOutput RunGreedy(const ValueOracle& oracle, const ElementSet& ground,
                       std::size_t k) {
  // Candidates in ascending id order so the first maximum is the smallest id.
  std::vector<ElementId> order(ground.begin(), ground.end());
  std::sort(order.begin(), order.end());
  auto evaluator = oracle.NewEvaluator();
  const std::size_t rounds = std::min(k, order.size());
  for (std::size_t r = 0; r < rounds; ++r) {
    std::optional<ElementId> best;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (ElementId e : order) {
      if (evaluator->Contains(e)) continue;
      const double gain = evaluator->Gain(e);
      if (gain > best_gain) {
        best_gain = gain;
        best = e;
      }
    }
    evaluator->Add(*best);
  }
  return {evaluator->members(), evaluator->value(), evaluator->oracle_calls()};
}

// Visits every combination of `size` positions out of n in lexicographic
// order.
template <typename Visit>
void ForEachCombination(std::size_t n, std::size_t size, Visit visit) {
  std::vector<std::size_t> pos(size);
  for (std::size_t i = 0; i < size; ++i) pos[i] = i;
  while (true) {
    visit(pos);
    if (size == 0) return;
    std::size_t i = size;
    while (i > 0 && pos[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
  }
}

OptimumResult Enumerate(const ValueOracle& oracle, const ElementSet& ground,
                        std::size_t k, std::uint64_t cap,
                        std::uint64_t* calls) {
  const std::size_t n = ground.size();
  const std::size_t top = std::min(k, n);
  const std::uint64_t count = Binomial(n, top);
  if (count > cap) {
    const std::string size = count == std::numeric_limits<std::uint64_t>::max()
                                 ? "more than 1.8e19"
                                 : std::to_string(count);
    throw ResourceLimitError("brute force: C(" + std::to_string(n) + ", " +
                             std::to_string(top) + ") = " + size +
                             " subsets exceeds cap " + std::to_string(cap));
  }
  std::vector<ElementId> order(ground.begin(), ground.end());
  std::sort(order.begin(), order.end());
  OptimumResult best;
  std::vector<ElementId> buffer;
  for (std::size_t size = 1; size <= top; ++size) {
    ForEachCombination(n, size, [&](const std::vector<std::size_t>& pos) {
      buffer.clear();
      for (std::size_t p : pos) buffer.push_back(order[p]);
      const double v = oracle.Eval(buffer);
      if (calls != nullptr) ++*calls;
      if (v > best.value) {
        best.value = v;
        best.set = ElementSet(buffer);
      }
    });
  }
  return best;
}

}  // namespace

ElementSet OfflineGreedy(const ValueOracle& oracle, const ElementSet& ground,
                         std::size_t k) {
  return RunGreedy(oracle, ground, k).set;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // result * (n - r + i) / i stays integral at every step.
    const std::uint64_t num = n - r + i;
    if (result > kMax / num) return kMax;
    result = result * num / i;
  }
  return result;
}

OptimumResult BruteForceOpt(const ValueOracle& oracle, const ElementSet& ground,
                            std::size_t k, std::uint64_t cap) {
  return Enumerate(oracle, ground, k, cap, nullptr);
}

void RecomputeGreedy::Process(ElementId e) {
  arrived_.Insert(e);
  GreedyOutput out = RunGreedy(oracle(), arrived_, k());
  solution_ = std::move(out.set);
  value_ = out.value;
  calls_ += out.calls;
}

void RecomputeBruteForce::Process(ElementId e) {
  arrived_.Insert(e);
  OptimumResult out = Enumerate(oracle(), arrived_, k(), cap_, &calls_);
  solution_ = std::move(out.set);
  value_ = out.value;
}

}  // namespace consub
