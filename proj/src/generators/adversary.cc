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

#include "consub/generators/adversary.h"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "consub/errors.h"
#include "consub/oracles/coverage.h"

namespace consub {

namespace {

std::shared_ptr<const ValueOracle> Singletons(
    std::size_t n, std::vector<std::uint32_t> extra = {},
    bool with_extra = false) {
  std::vector<std::vector<std::uint32_t>> items(n);
  for (std::size_t g = 0; g < n; ++g) {
    items[g] = {static_cast<std::uint32_t>(g)};
  }
  if (with_extra) items.push_back(std::move(extra));
  return std::make_shared<WeightedCoverageOracle>(std::vector<double>(n, 1.0),
                                                  std::move(items));
}

void CheckFeasible(const StreamingAlgorithm& algorithm, std::size_t k) {
  if (algorithm.solution().size() > k) {
    throw ContractViolation(std::string(algorithm.name()) + " holds " +
                            std::to_string(algorithm.solution().size()) +
                            " elements with k = " + std::to_string(k));
  }
}

}  // namespace

AdversaryResult RunLowerBoundAdversary(const AlgorithmFactory& factory,
                                       std::size_t k) {
  if (k < 1) throw std::invalid_argument("adversary: k must be >= 1");
  const std::size_t n = 2 * k;

  // Observation pass on the singletons alone.
  auto probe_oracle = Singletons(n);
  auto probe = factory(*probe_oracle, k);
  for (std::size_t g = 0; g < n; ++g) {
    probe->Insert(ElementId(g));
    CheckFeasible(*probe, k);
  }
  const ElementSet kept = probe->solution();

  std::vector<char> covered(n, 0);
  std::vector<std::uint32_t> big;
  for (ElementId e : kept) {
    covered[Index(e)] = 1;
    big.push_back(static_cast<std::uint32_t>(Index(e)));
  }
  for (std::size_t g = 0; g < n && big.size() < k; ++g) {
    if (!covered[g]) big.push_back(static_cast<std::uint32_t>(g));
  }

  AdversaryResult result;
  result.singletons_kept = kept;
  result.instance.spec = {
      "lower-bound-adversary",
      {{"k", k}, {"algorithm", std::string(probe->name())}}};
  result.instance.oracle = Singletons(n, big, true);
  result.instance.k = k;
  for (std::size_t g = 0; g <= n; ++g) {
    result.instance.stream.push_back(ElementId(g));
    result.instance.labels.push_back(g < n ? "{g_" + std::to_string(g + 1) + "}"
                                           : "G_adv");
  }

  // Replay on the final oracle; the prefix must reproduce the observation.
  auto algorithm = factory(*result.instance.oracle, k);
  RunTrace& trace = result.trace;
  trace.algorithm = std::string(algorithm->name());
  trace.k = k;
  trace.params = algorithm->params();
  trace.instance = result.instance.spec.name;
  trace.instance_hash = InstanceHash(result.instance.spec);
  for (ElementId e : result.instance.stream) {
    trace.steps.push_back(algorithm->Insert(e));
    CheckFeasible(*algorithm, k);
    if (Index(e) + 1 == n && !(algorithm->solution() == kept)) {
      throw ContractViolation(trace.algorithm +
                              " is not deterministic on the singleton prefix");
    }
  }

  result.final_value = algorithm->solution_value();
  result.opt_value = static_cast<double>(2 * k - 1);
  result.ratio = result.final_value > 0.0
                     ? result.opt_value / result.final_value
                     : std::numeric_limits<double>::infinity();
  return result;
}

double LowerBoundRatio(std::size_t k, std::size_t c) {
  return static_cast<double>(2 * k - 1) / static_cast<double>(k + c);
}

}  // namespace consub
