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

#include "consub/trace.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "consub/errors.h"

namespace consub {

namespace {

constexpr const char* kCsvColumns[] = {"t",
                                       "value",
                                       "additions",
                                       "removals",
                                       "cumulative_additions",
                                       "oracle_calls",
                                       "elapsed_ns"};

std::vector<std::string> SplitComma(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T ParseNumber(const std::string& s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad trace field '" + s + "'", line);
  }
  return v;
}

}  // namespace

ChangeCounts CountChanges(const ElementSet& prev, const ElementSet& next) {
  ChangeCounts c;
  for (ElementId e : next) {
    if (!prev.Contains(e)) ++c.additions;
  }
  for (ElementId e : prev) {
    if (!next.Contains(e)) ++c.removals;
  }
  return c;
}

std::size_t RunTrace::CumulativeAdditions() const {
  std::size_t total = 0;
  for (const StepRecord& s : steps) total += s.additions;
  return total;
}

std::uint64_t RunTrace::TotalOracleCalls() const {
  std::uint64_t total = 0;
  for (const StepRecord& s : steps) total += s.oracle_calls;
  return total;
}

double RunTrace::FinalValue() const {
  return steps.empty() ? 0.0 : steps.back().value;
}

std::string TraceViolation::Describe() const {
  std::string what;
  switch (kind) {
    case Kind::kOverCapacity:
      what = "solution size " + std::to_string(observed) + " exceeds k";
      break;
    case Kind::kTooManyAdditions:
      what = std::to_string(observed) + " additions exceed the bound";
      break;
    case Kind::kBadIndex:
      what = "step index " + std::to_string(observed) + " out of sequence";
      break;
  }
  return "t=" + std::to_string(t) + ": " + what;
}

std::vector<TraceViolation> ValidateTrace(
    const RunTrace& trace, std::size_t k,
    std::optional<std::size_t> consistency_bound) {
  if (trace.steps.empty()) {
    throw std::invalid_argument("ValidateTrace: empty trace");
  }
  std::vector<TraceViolation> out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const StepRecord& s = trace.steps[i];
    const std::size_t t = i + 1;
    if (s.t != t) {
      out.push_back({t, TraceViolation::Kind::kBadIndex, s.t});
    }
    if (s.solution.size() > k) {
      out.push_back(
          {t, TraceViolation::Kind::kOverCapacity, s.solution.size()});
    }
    if (consistency_bound && s.additions > *consistency_bound) {
      out.push_back({t, TraceViolation::Kind::kTooManyAdditions, s.additions});
    }
  }
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void WriteTraceCsv(const RunTrace& trace, std::ostream& out) {
  bool with_reference = false;
  for (const StepRecord& s : trace.steps) {
    if (s.reference) with_reference = true;
  }
  for (std::size_t i = 0; i < std::size(kCsvColumns); ++i) {
    out << (i ? "," : "") << kCsvColumns[i];
  }
  if (with_reference) out << ",reference";
  out << "\n";
  std::size_t cumulative = 0;
  for (const StepRecord& s : trace.steps) {
    cumulative += s.additions;
    out << s.t << ',' << FormatDouble(s.value) << ',' << s.additions << ','
        << s.removals << ',' << cumulative << ',' << s.oracle_calls << ','
        << s.elapsed.count();
    if (with_reference) {
      out << ',' << (s.reference ? FormatDouble(*s.reference) : "");
    }
    out << "\n";
  }
}

std::vector<TraceCsvRow> ReadTraceCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty trace CSV", 1);
  const std::vector<std::string> header = SplitComma(line);
  if (header.size() < std::size(kCsvColumns)) {
    throw ParseError("trace CSV header has too few columns", 1);
  }
  for (std::size_t i = 0; i < std::size(kCsvColumns); ++i) {
    if (header[i] != kCsvColumns[i]) {
      throw ParseError("expected column '" + std::string(kCsvColumns[i]) +
                           "', found '" + header[i] + "'",
                       1);
    }
  }
  std::vector<TraceCsvRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitComma(line);
    if (f.size() < std::size(kCsvColumns)) {
      throw ParseError("short trace row", lineno);
    }
    TraceCsvRow r;
    r.t = ParseNumber<std::size_t>(f[0], lineno);
    r.value = ParseNumber<double>(f[1], lineno);
    r.additions = ParseNumber<std::size_t>(f[2], lineno);
    r.removals = ParseNumber<std::size_t>(f[3], lineno);
    r.cumulative_additions = ParseNumber<std::size_t>(f[4], lineno);
    r.oracle_calls = ParseNumber<std::uint64_t>(f[5], lineno);
    r.elapsed_ns = ParseNumber<std::int64_t>(f[6], lineno);
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json TraceToJson(const RunTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const StepRecord& s : trace.steps) {
    nlohmann::json ids = nlohmann::json::array();
    for (ElementId e : s.solution) ids.push_back(Index(e));
    nlohmann::json step = {{"t", s.t},
                           {"value", s.value},
                           {"additions", s.additions},
                           {"removals", s.removals},
                           {"oracle_calls", s.oracle_calls},
                           {"elapsed_ns", s.elapsed.count()},
                           {"solution", std::move(ids)}};
    if (s.reference) step["reference"] = *s.reference;
    steps.push_back(std::move(step));
  }
  return {{"algorithm", trace.algorithm},
          {"k", trace.k},
          {"params", trace.params},
          {"instance", trace.instance},
          {"instance_hash", trace.instance_hash},
          {"steps", std::move(steps)}};
}

RunTrace TraceFromJson(const nlohmann::json& j) {
  RunTrace trace;
  trace.algorithm = j.at("algorithm").get<std::string>();
  trace.k = j.at("k").get<std::size_t>();
  trace.params = j.at("params").get<std::map<std::string, double>>();
  trace.instance = j.value("instance", "");
  trace.instance_hash = j.value("instance_hash", "");
  for (const auto& s : j.at("steps")) {
    StepRecord r;
    r.t = s.at("t").get<std::size_t>();
    r.value = s.at("value").get<double>();
    r.additions = s.at("additions").get<std::size_t>();
    r.removals = s.at("removals").get<std::size_t>();
    r.oracle_calls = s.at("oracle_calls").get<std::uint64_t>();
    r.elapsed =
        std::chrono::nanoseconds(s.at("elapsed_ns").get<std::int64_t>());
    for (const auto& id : s.at("solution")) {
      r.solution.Insert(ElementId{id.get<std::uint32_t>()});
    }
    if (s.contains("reference")) r.reference = s.at("reference").get<double>();
    trace.steps.push_back(std::move(r));
  }
  return trace;
}

}  // namespace consub
