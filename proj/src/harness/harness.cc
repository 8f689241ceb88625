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

#include "consub/harness/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "consub/algorithms/registry.h"
#include "consub/errors.h"
#include "consub/harness/instances.h"
#include "consub/ingest/loaders.h"

namespace consub {

namespace {

namespace fs = std::filesystem;

struct PreparedInstance {
  Instance instance;
  std::size_t k = 0;
  std::string hash;
  std::string stem;                     // <name>-<hash>
  std::vector<double> reference_steps;  // brute mode
  std::optional<double> greedy_value;   // greedy mode
};

// Runs task(i) for i in [0, count) on up to `jobs` threads. The first
// exception (by task index) is rethrown after all threads finish.
template <typename Task>
void ParallelFor(std::size_t count, std::size_t jobs, Task task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(std::max<std::size_t>(jobs, 1), count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

InstanceSpec WithOverrides(InstanceSpec spec, const RunConfig& config) {
  if (spec.name == "geo-logdet") {
    if (config.alpha) spec.params["alpha"] = *config.alpha;
    if (config.bandwidth) spec.params["bandwidth"] = *config.bandwidth;
  } else if (spec.name == "recommendation") {
    if (config.alpha) spec.params["mix"] = *config.alpha;
  }
  return spec;
}

void CheckBruteForceCap(const PreparedInstance& p, std::uint64_t cap) {
  const std::size_t n = p.instance.stream.size();
  const std::uint64_t subsets = Binomial(n, std::min(p.k, n));
  if (subsets > cap) {
    throw ResourceLimitError(
        "brute-force reference on " + p.instance.spec.name + " needs C(" +
        std::to_string(n) + ", " + std::to_string(std::min(p.k, n)) +
        ") = " + std::to_string(subsets) + " subsets, above the cap of " +
        std::to_string(cap));
  }
}

std::string ReadText(const fs::path& path) {
  try {
    return ReadFile(path);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("cannot read " + path.string());
  }
}

}  // namespace

ReferenceMode ParseReferenceMode(const std::string& text) {
  if (text == "none") return ReferenceMode::kNone;
  if (text == "brute") return ReferenceMode::kBrute;
  if (text == "greedy") return ReferenceMode::kGreedy;
  throw std::invalid_argument("unknown reference mode '" + text +
                              "' (expected brute, greedy or none)");
}

std::string ReferenceModeName(ReferenceMode mode) {
  switch (mode) {
    case ReferenceMode::kBrute:
      return "brute";
    case ReferenceMode::kGreedy:
      return "greedy";
    case ReferenceMode::kNone:
      break;
  }
  return "none";
}

void WriteFileAtomic(const fs::path& path, const std::string& contents) {
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id();
  fs::path tmp = path;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

RunReport Run(const RunConfig& config) {
  if (config.algorithms.empty()) {
    throw std::invalid_argument("run: no algorithm given");
  }
  if (config.instances.empty()) {
    throw std::invalid_argument("run: no instance given");
  }
  const auto& known = AlgorithmNames();
  for (const std::string& a : config.algorithms) {
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw std::invalid_argument("unknown algorithm '" + a + "'");
    }
  }
  if (config.k && *config.k == 0)
    throw std::invalid_argument("run: k must be >= 1");

  // Everything that can fail on input happens before the first run.
  std::vector<PreparedInstance> prepared;
  for (const InstanceSpec& raw : config.instances) {
    PreparedInstance p;
    p.instance = ResolveInstance(WithOverrides(raw, config), config.data_dir);
    p.k = config.k.value_or(p.instance.k.value_or(kDefaultK));
    p.hash = InstanceHash(p.instance.spec);
    p.stem = p.instance.spec.name + "-" + p.hash.substr(0, 8);
    prepared.push_back(std::move(p));
  }
  const bool runs_brute_force =
      std::find(config.algorithms.begin(), config.algorithms.end(),
                "brute-force") != config.algorithms.end();
  for (const PreparedInstance& p : prepared) {
    if (config.reference == ReferenceMode::kBrute || runs_brute_force) {
      CheckBruteForceCap(p, config.brute_force_cap);
    }
  }
  fs::create_directories(config.out_dir);

  ParallelFor(prepared.size(), config.jobs, [&](std::size_t i) {
    PreparedInstance& p = prepared[i];
    if (config.reference == ReferenceMode::kBrute) {
      RecomputeBruteForce reference(*p.instance.oracle, p.k,
                                    config.brute_force_cap);
      const RunTrace trace = RunStream(reference, p.instance.stream);
      for (const StepRecord& s : trace.steps)
        p.reference_steps.push_back(s.value);
    } else if (config.reference == ReferenceMode::kGreedy) {
      const ElementSet ground(p.instance.stream);
      p.greedy_value = p.instance.oracle->Eval(
          OfflineGreedy(*p.instance.oracle, ground, p.k));
    }
  });

  AlgorithmParams params;
  params.beta = config.beta;
  params.epsilon = config.epsilon;
  params.brute_force_cap = config.brute_force_cap;

  const std::size_t pairs = prepared.size() * config.algorithms.size();
  std::vector<RunResult> results(pairs);
  ParallelFor(pairs, config.jobs, [&](std::size_t r) {
    const PreparedInstance& p = prepared[r / config.algorithms.size()];
    const std::string& name = config.algorithms[r % config.algorithms.size()];
    RunResult& result = results[r];

    auto algorithm = MakeAlgorithm(name, *p.instance.oracle, p.k, params);
    const auto start = std::chrono::steady_clock::now();
    result.trace = RunStream(*algorithm, p.instance.stream);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    result.trace.instance = p.instance.spec.name;
    result.trace.instance_hash = p.hash;
    for (std::size_t t = 0; t < p.reference_steps.size(); ++t) {
      result.trace.steps[t].reference = p.reference_steps[t];
    }
    result.consistency_bound = algorithm->consistency_bound();
    result.violations =
        ValidateTrace(result.trace, p.k, result.consistency_bound).size();

    result.csv_path = config.out_dir / (p.stem + "__" + name + ".csv");
    result.json_path = config.out_dir / (p.stem + "__" + name + ".json");
    std::ostringstream csv;
    WriteTraceCsv(result.trace, csv);
    WriteFileAtomic(result.csv_path, csv.str());
    nlohmann::json sidecar = TraceToJson(result.trace);
    sidecar["instance_spec"] = SpecToJson(p.instance.spec);
    WriteFileAtomic(result.json_path, sidecar.dump(1) + "\n");
  });

  RunReport report;
  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t r = 0; r < pairs; ++r) {
    const PreparedInstance& p = prepared[r / config.algorithms.size()];
    const RunResult& result = results[r];
    std::size_t max_additions = 0;
    for (const StepRecord& s : result.trace.steps) {
      max_additions = std::max(max_additions, s.additions);
    }
    nlohmann::json run = {
        {"algorithm", result.trace.algorithm},
        {"instance", SpecToJson(p.instance.spec)},
        {"instance_hash", p.hash},
        {"k", p.k},
        {"params", result.trace.params},
        {"steps", result.trace.steps.size()},
        {"final_value", result.trace.FinalValue()},
        {"cumulative_additions", result.trace.CumulativeAdditions()},
        {"max_step_additions", max_additions},
        {"total_oracle_calls", result.trace.TotalOracleCalls()},
        {"wall_time_s", result.wall_seconds},
        {"consistency_bound", result.consistency_bound
                                  ? nlohmann::json(*result.consistency_bound)
                                  : nlohmann::json(nullptr)},
        {"violations", result.violations},
        {"trace_csv", result.csv_path.filename().string()},
        {"trace_json", result.json_path.filename().string()}};
    if (!p.reference_steps.empty()) {
      run["reference"] = {{"kind", "brute-force optimum"},
                          {"final_value", p.reference_steps.back()}};
    } else if (p.greedy_value) {
      run["reference"] = {{"kind", "offline greedy (not an optimum)"},
                          {"final_value", *p.greedy_value}};
    }
    runs.push_back(std::move(run));
    report.runs.push_back(std::move(results[r]));
  }
  report.summary = {{"epsilon", config.epsilon},
                    {"beta", config.beta},
                    {"reference", ReferenceModeName(config.reference)},
                    {"runs", std::move(runs)}};
  WriteFileAtomic(config.out_dir / "summary.json",
                  report.summary.dump(2) + "\n");
  return report;
}

Comparison Compare(const std::vector<fs::path>& csv_paths) {
  if (csv_paths.empty())
    throw std::invalid_argument("compare: no traces given");
  Comparison out;
  std::string first_path;
  for (const fs::path& csv_path : csv_paths) {
    fs::path json_path = csv_path;
    json_path.replace_extension(".json");
    nlohmann::json meta;
    try {
      meta = nlohmann::json::parse(ReadText(json_path));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(json_path.string() + ": " + e.what());
    }
    const std::string hash = meta.value("instance_hash", "");
    const std::size_t k = meta.value("k", std::size_t{0});
    if (out.rows.empty()) {
      out.instance_hash = hash;
      out.k = k;
      first_path = csv_path.string();
    } else if (hash != out.instance_hash) {
      throw std::invalid_argument(
          "compare: traces are over different instances: " + first_path +
          " has instance hash " + out.instance_hash + ", " + csv_path.string() +
          " has " + hash);
    } else if (k != out.k) {
      throw std::invalid_argument("compare: traces use different k (" +
                                  std::to_string(out.k) + " vs " +
                                  std::to_string(k) + ")");
    }
    std::istringstream csv(ReadText(csv_path));
    const std::vector<TraceCsvRow> rows = ReadTraceCsv(csv);
    if (rows.empty()) {
      throw std::invalid_argument("compare: " + csv_path.string() +
                                  " is empty");
    }
    CompareRow row;
    row.algorithm = meta.value("algorithm", csv_path.stem().string());
    row.final_value = rows.back().value;
    row.cumulative_additions = rows.back().cumulative_additions;
    out.rows.push_back(std::move(row));
  }
  double best = 0.0;
  std::size_t fewest = std::numeric_limits<std::size_t>::max();
  for (const CompareRow& r : out.rows) {
    best = std::max(best, r.final_value);
    fewest = std::min(fewest, r.cumulative_additions);
  }
  auto ratio = [](double a, double b) {
    if (b == 0.0)
      return a == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return a / b;
  };
  for (CompareRow& r : out.rows) {
    r.value_ratio = ratio(r.final_value, best);
    r.additions_ratio = ratio(static_cast<double>(r.cumulative_additions),
                              static_cast<double>(fewest));
  }
  return out;
}

std::string FormatComparison(const Comparison& comparison) {
  const std::vector<std::string> headers = {"algorithm", "final_value",
                                            "value_ratio", "cum_additions",
                                            "additions_ratio"};
  std::vector<std::vector<std::string>> cells;
  for (const CompareRow& r : comparison.rows) {
    std::ostringstream value, vratio, aratio;
    value << std::setprecision(10) << r.final_value;
    vratio << std::fixed << std::setprecision(4) << r.value_ratio;
    aratio << std::fixed << std::setprecision(4) << r.additions_ratio;
    cells.push_back({r.algorithm, value.str(), vratio.str(),
                     std::to_string(r.cumulative_additions), aratio.str()});
  }
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << "instance " << comparison.instance_hash << ", k = " << comparison.k
      << "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[c]))
            << row[c];
      }
    }
    out << "\n";
  };
  emit(headers);
  for (const auto& row : cells) emit(row);
  return out.str();
}

std::string ComparisonCsv(const Comparison& comparison) {
  std::ostringstream out;
  out << "algorithm,final_value,value_ratio,cumulative_additions,"
         "additions_ratio\n";
  for (const CompareRow& r : comparison.rows) {
    out << r.algorithm << ',' << FormatDouble(r.final_value) << ','
        << FormatDouble(r.value_ratio) << ',' << r.cumulative_additions << ','
        << FormatDouble(r.additions_ratio) << "\n";
  }
  return out.str();
}

}  // namespace consub
