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

// consub: run streaming algorithms on generated or dataset instances,
// compare their traces and dump generated instances.
//
//   consub run --algo encompassing-set,swapping --instance
//   swapping-hard:i=7,delta=0.01 consub compare out/*.csv consub gen
//   sieve-instability --params n=50,mode=doubling,k=10

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "consub/errors.h"
#include "consub/generators/generators.h"
#include "consub/harness/harness.h"
#include "consub/harness/instances.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

std::vector<std::string> SplitCommas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::size_t pos = 0;
    while (pos <= item.size()) {
      const std::size_t comma = std::min(item.find(',', pos), item.size());
      if (comma > pos) out.push_back(item.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consistent streaming submodular maximization benchmark"};
  app.require_subcommand(1);

  std::vector<std::string> algos;
  std::vector<std::string> instances;
  std::optional<std::size_t> k;
  consub::RunConfig config;
  std::optional<double> alpha, bandwidth;
  std::string reference = "none";
  std::string data_dir = consub::DefaultDataDir().string();
  std::string out_dir = "out";

  CLI::App* run = app.add_subcommand("run", "Run algorithms on instances");
  run->add_option("--algo", algos, "Algorithm names (comma separated)")
      ->required();
  run->add_option("--instance", instances,
                  "Instance: name[:key=value,...] or spec.json")
      ->required();
  run->add_option("--k", k, "Cardinality (default: instance k, else 20)");
  run->add_option("--eps", config.epsilon, "Epsilon")->capture_default_str();
  run->add_option("--beta", config.beta, "Encompassing-Set beta")
      ->capture_default_str();
  run->add_option("--alpha", alpha, "Log-det alpha / recommendation mix");
  run->add_option("--bandwidth", bandwidth, "Log-det kernel bandwidth h");
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_option("--reference", reference, "brute|greedy|none")
      ->capture_default_str();
  run->add_option("--jobs", config.jobs, "Parallel runs")
      ->capture_default_str();
  run->add_option("--cap", config.brute_force_cap, "Brute-force subset cap")
      ->capture_default_str();
  run->add_option(
         "--data-dir", data_dir,
         std::string("Dataset directory (env ") + consub::kDataDirEnv + ")")
      ->capture_default_str();

  std::vector<std::string> traces;
  std::string compare_csv;
  CLI::App* compare = app.add_subcommand("compare", "Compare trace CSVs");
  compare->add_option("traces", traces, "Trace CSV files")->required();
  compare->add_option("--csv", compare_csv, "Also write the table as CSV");

  std::string generator;
  std::string params;
  std::string gen_out;
  CLI::App* gen =
      app.add_subcommand("gen", "Print a generated instance as JSON");
  gen->add_option("generator", generator, "Generator name")->required();
  gen->add_option("--params", params, "key=value,...");
  gen->add_option("--out", gen_out, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      config.algorithms = SplitCommas(algos);
      for (const std::string& arg : instances) {
        config.instances.push_back(consub::ParseInstanceArg(arg));
      }
      config.k = k;
      config.alpha = alpha;
      config.bandwidth = bandwidth;
      config.reference = consub::ParseReferenceMode(reference);
      config.out_dir = out_dir;
      config.data_dir = data_dir;
      const consub::RunReport report = consub::Run(config);
      for (const consub::RunResult& r : report.runs) {
        std::cout << r.trace.algorithm << "  " << r.trace.instance
                  << "  final_value="
                  << consub::FormatDouble(r.trace.FinalValue())
                  << "  cumulative_additions=" << r.trace.CumulativeAdditions()
                  << "  violations=" << r.violations << "  -> "
                  << r.csv_path.string() << "\n";
      }
      return kExitOk;
    }
    if (*compare) {
      std::vector<std::filesystem::path> paths(traces.begin(), traces.end());
      const consub::Comparison table = consub::Compare(paths);
      std::cout << consub::FormatComparison(table);
      if (!compare_csv.empty()) {
        consub::WriteFileAtomic(compare_csv, consub::ComparisonCsv(table));
      }
      return kExitOk;
    }
    if (*gen) {
      consub::InstanceSpec spec{generator, consub::ParseParamList(params)};
      const consub::Instance instance = consub::GenerateInstance(spec);
      const std::string text = consub::InstanceToJson(instance).dump(1) + "\n";
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        consub::WriteFileAtomic(gen_out, text);
      }
      return kExitOk;
    }
  } catch (const consub::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const consub::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
