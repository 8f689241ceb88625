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

#ifndef CONSUB_ALGORITHMS_STREAMING_ALGORITHM_H_
#define CONSUB_ALGORITHMS_STREAMING_ALGORITHM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "consub/element_set.h"
#include "consub/oracle.h"
#include "consub/trace.h"

namespace consub {

// Insertion-only streaming algorithm maintaining a solution of at most k
// elements. Insert() wraps the algorithm-specific Process() and produces the
// per-step record (change counts against the previous solution, oracle calls
// and wall time).
//
// Instances are single-owner; the oracle must outlive them.
class StreamingAlgorithm {
 public:
  StreamingAlgorithm(const ValueOracle& oracle, std::size_t k);
  virtual ~StreamingAlgorithm() = default;
  StreamingAlgorithm(const StreamingAlgorithm&) = delete;
  StreamingAlgorithm& operator=(const StreamingAlgorithm&) = delete;

  virtual std::string_view name() const = 0;
  // Declared bound C on per-step additions; nullopt when there is none.
  virtual std::optional<std::size_t> consistency_bound() const = 0;
  virtual std::map<std::string, double> params() const { return {}; }

  virtual const ElementSet& solution() const = 0;
  virtual double solution_value() const = 0;

  // Processes the next stream element. Throws std::invalid_argument when `e`
  // was inserted before or is not a ground element.
  StepRecord Insert(ElementId e);

  std::size_t k() const { return k_; }
  std::size_t steps() const { return steps_; }
  const ValueOracle& oracle() const { return oracle_; }
  std::uint64_t oracle_calls() const { return OracleCalls(); }

 protected:
  virtual void Process(ElementId e) = 0;
  virtual std::uint64_t OracleCalls() const = 0;

 private:
  const ValueOracle& oracle_;
  std::size_t k_;
  std::size_t steps_ = 0;
  std::vector<char> seen_;
};

// Feeds `stream` to `algorithm` and collects the trace.
RunTrace RunStream(StreamingAlgorithm& algorithm,
                   std::span<const ElementId> stream);

}  // namespace consub

#endif  // CONSUB_ALGORITHMS_STREAMING_ALGORITHM_H_
