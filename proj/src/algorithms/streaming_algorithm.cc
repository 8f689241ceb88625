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

#include "consub/algorithms/streaming_algorithm.h"

#include <chrono>
#include <stdexcept>
#include <string>

namespace consub {

StreamingAlgorithm::StreamingAlgorithm(const ValueOracle& oracle, std::size_t k)
    : oracle_(oracle), k_(k), seen_(oracle.ground_size(), 0) {}

StepRecord StreamingAlgorithm::Insert(ElementId e) {
  oracle_.CheckId(e);
  if (seen_[Index(e)]) {
    throw std::invalid_argument(std::string(name()) + ": element " +
                                std::to_string(Index(e)) +
                                " was already inserted");
  }
  seen_[Index(e)] = 1;

  const ElementSet before = solution();
  const std::uint64_t calls_before = OracleCalls();
  const auto start = std::chrono::steady_clock::now();
  Process(e);
  const auto stop = std::chrono::steady_clock::now();

  StepRecord record;
  record.t = ++steps_;
  record.solution = solution();
  record.value = solution_value();
  const ChangeCounts changes = CountChanges(before, record.solution);
  record.additions = changes.additions;
  record.removals = changes.removals;
  record.oracle_calls = OracleCalls() - calls_before;
  record.elapsed =
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
  return record;
}

RunTrace RunStream(StreamingAlgorithm& algorithm,
                   std::span<const ElementId> stream) {
  RunTrace trace;
  trace.algorithm = std::string(algorithm.name());
  trace.k = algorithm.k();
  trace.params = algorithm.params();
  trace.steps.reserve(stream.size());
  for (ElementId e : stream) trace.steps.push_back(algorithm.Insert(e));
  return trace;
}

}  // namespace consub
