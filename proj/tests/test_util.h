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

#ifndef CONSUB_TESTS_TEST_UTIL_H_
#define CONSUB_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "consub/element_set.h"
#include "consub/oracle.h"
#include "consub/oracles/coverage.h"
#include "consub/oracles/dominating.h"
#include "consub/oracles/modular.h"

namespace consub::testing {

inline ElementId E(std::uint32_t i) { return ElementId(i); }

inline std::vector<ElementId> Iota(std::size_t n) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ElementId(i));
  return out;
}

inline std::shared_ptr<ModularOracle> RandomModular(std::size_t n,
                                                    std::mt19937_64& rng) {
  std::uniform_real_distribution<double> w(0.0, 10.0);
  std::vector<double> weights(n);
  for (double& x : weights) x = w(rng);
  return std::make_shared<ModularOracle>(std::move(weights));
}

inline std::shared_ptr<WeightedCoverageOracle> RandomCoverage(
    std::size_t n, std::size_t items, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> w(0.1, 5.0);
  std::uniform_int_distribution<std::uint32_t> pick(
      0, static_cast<std::uint32_t>(items - 1));
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<double> weights(items);
  for (double& x : weights) x = w(rng);
  std::vector<std::vector<std::uint32_t>> covers(n);
  for (auto& c : covers) {
    const int m = count(rng);
    for (int j = 0; j < m; ++j) c.push_back(pick(rng));
  }
  return std::make_shared<WeightedCoverageOracle>(std::move(weights),
                                                  std::move(covers));
}

inline std::shared_ptr<DominatingOracle> RandomGraph(std::size_t n, double p,
                                                     std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return std::make_shared<DominatingOracle>(n, edges);
}

// Exact optimum over subsets of `ground` of size <= k by bitmask enumeration,
// independent of BruteForceOpt.
inline double MaskOptimum(const ValueOracle& oracle,
                          const std::vector<ElementId>& ground, std::size_t k) {
  double best = 0.0;
  const std::uint32_t n = static_cast<std::uint32_t>(ground.size());
  std::vector<ElementId> set;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
    set.clear();
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) set.push_back(ground[i]);
    }
    best = std::max(best, oracle.Eval(set));
  }
  return best;
}

}  // namespace consub::testing

#endif  // CONSUB_TESTS_TEST_UTIL_H_
