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

#ifndef CONSUB_HARNESS_HARNESS_H_
#define CONSUB_HARNESS_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "consub/algorithms/offline.h"
#include "consub/generators/instance.h"
#include "consub/trace.h"
#include "json.hpp"

namespace consub {

enum class ReferenceMode {
  kNone,
  // Per-step brute-force optimum of the prefix, written as the `reference`
  // trace column. Subject to brute_force_cap.
  kBrute,
  // Offline greedy on the whole stream, reported in the summary only.
  kGreedy,
};

ReferenceMode ParseReferenceMode(const std::string& text);
std::string ReferenceModeName(ReferenceMode mode);

inline constexpr std::size_t kDefaultK = 20;

struct RunConfig {
  std::vector<std::string> algorithms;
  std::vector<InstanceSpec> instances;
  // Falls back to the instance's own k, then to kDefaultK.
  std::optional<std::size_t> k;
  double epsilon = 0.1;
  double beta = 1.14;
  // Overrides for geo-logdet (alpha, bandwidth) and recommendation (alpha is
  // the mix). Written into the instance params, so they enter the hash.
  std::optional<double> alpha;
  std::optional<double> bandwidth;
  std::filesystem::path out_dir = "out";
  std::filesystem::path data_dir = "data";
  std::size_t jobs = 1;
  ReferenceMode reference = ReferenceMode::kNone;
  std::uint64_t brute_force_cap = kDefaultBruteForceCap;
};

struct RunResult {
  RunTrace trace;
  std::optional<std::size_t> consistency_bound;
  std::size_t violations = 0;
  double wall_seconds = 0.0;
  std::filesystem::path csv_path;
  std::filesystem::path json_path;
};

struct RunReport {
  std::vector<RunResult> runs;
  nlohmann::json summary;  // also written to <out_dir>/summary.json
};

// Resolves every instance (failing before any run on missing data or an
// oversized brute-force request), runs every (algorithm, instance) pair on
// up to `jobs` threads and writes, per pair, <instance>-<hash>__<algo>.csv
// and a .json sidecar with metadata and solutions, plus summary.json. Files
// are written to a temporary name and renamed into place.
RunReport Run(const RunConfig& config);

struct CompareRow {
  std::string algorithm;
  double final_value = 0.0;
  double value_ratio = 0.0;  // final_value / best final_value
  std::size_t cumulative_additions = 0;
  double additions_ratio = 0.0;  // cumulative / smallest cumulative
};

struct Comparison {
  std::string instance_hash;
  std::size_t k = 0;
  std::vector<CompareRow> rows;
};

// Loads trace CSVs together with their .json sidecars. Throws
// std::invalid_argument when the traces disagree on instance (both hashes are
// named) or k.
Comparison Compare(const std::vector<std::filesystem::path>& csv_paths);
std::string FormatComparison(const Comparison& comparison);
std::string ComparisonCsv(const Comparison& comparison);

// Writes `contents` to `path` through a temporary file and a rename.
void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& contents);

}  // namespace consub

#endif  // CONSUB_HARNESS_HARNESS_H_
