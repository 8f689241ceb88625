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

#ifndef CONSUB_TRACE_H_
#define CONSUB_TRACE_H_

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "consub/element_set.h"
#include "json.hpp"

namespace consub {

struct ChangeCounts {
  std::size_t additions = 0;  // |next \ prev|
  std::size_t removals = 0;   // |prev \ next|

  friend bool operator==(const ChangeCounts&, const ChangeCounts&) = default;
};

ChangeCounts CountChanges(const ElementSet& prev, const ElementSet& next);

// Snapshot taken after one stream insertion.
struct StepRecord {
  std::size_t t = 0;  // 1-based stream position
  ElementSet solution;
  double value = 0.0;
  std::size_t additions = 0;
  std::size_t removals = 0;
  std::uint64_t oracle_calls = 0;  // calls made during this step
  std::chrono::nanoseconds elapsed{0};
  // Optional per-step reference optimum (brute force), when requested.
  std::optional<double> reference;
};

struct RunTrace {
  std::string algorithm;
  std::size_t k = 0;
  std::map<std::string, double> params;
  std::string instance;       // instance name, e.g. "swapping-hard"
  std::string instance_hash;  // see InstanceHash()
  std::vector<StepRecord> steps;

  std::size_t CumulativeAdditions() const;
  std::uint64_t TotalOracleCalls() const;
  double FinalValue() const;
};

struct TraceViolation {
  enum class Kind { kOverCapacity, kTooManyAdditions, kBadIndex };
  std::size_t t = 0;
  Kind kind = Kind::kOverCapacity;
  std::size_t observed = 0;

  std::string Describe() const;
};

// Every step where |solution| > k, additions > consistency_bound, or the step
// index breaks the 1..n numbering. An empty result certifies feasibility and
// C-consistency. `consistency_bound` = nullopt means "unbounded".
// Throws std::invalid_argument on an empty trace.
std::vector<TraceViolation> ValidateTrace(
    const RunTrace& trace, std::size_t k,
    std::optional<std::size_t> consistency_bound);

// Shortest round-trip decimal form (std::to_chars), so text output is
// reproducible bit-for-bit.
std::string FormatDouble(double v);

// CSV columns, in this order:
//   t,value,additions,removals,cumulative_additions,oracle_calls,elapsed_ns
// followed by `reference` when any step carries a reference value.
void WriteTraceCsv(const RunTrace& trace, std::ostream& out);

// Parsed CSV row, as consumed by `compare`.
struct TraceCsvRow {
  std::size_t t = 0;
  double value = 0.0;
  std::size_t additions = 0;
  std::size_t removals = 0;
  std::size_t cumulative_additions = 0;
  std::uint64_t oracle_calls = 0;
  std::int64_t elapsed_ns = 0;
};
std::vector<TraceCsvRow> ReadTraceCsv(std::istream& in);

nlohmann::json TraceToJson(const RunTrace& trace);
RunTrace TraceFromJson(const nlohmann::json& j);

}  // namespace consub

#endif  // CONSUB_TRACE_H_
