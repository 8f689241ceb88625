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

#include "consub/harness/instances.h"

#include <charconv>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "consub/generators/generators.h"
#include "consub/ingest/loaders.h"
#include "consub/oracles/dominating.h"
#include "consub/oracles/kmedoid.h"
#include "consub/oracles/logdet.h"
#include "consub/oracles/metric.h"
#include "consub/oracles/recommendation.h"

namespace consub {

namespace {

namespace fs = std::filesystem;

nlohmann::json ParseScalar(const std::string& s) {
  long long i = 0;
  auto [iptr, iec] = std::from_chars(s.data(), s.data() + s.size(), i);
  if (iec == std::errc() && iptr == s.data() + s.size()) return i;
  double d = 0.0;
  auto [dptr, dec] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (dec == std::errc() && dptr == s.data() + s.size()) return d;
  return s;
}

std::string StringParam(const InstanceSpec& spec, const char* key,
                        const std::string& fallback) {
  if (!spec.params.contains(key)) return fallback;
  const nlohmann::json& v = spec.params.at(key);
  if (!v.is_string()) {
    throw std::invalid_argument(spec.name + ": parameter '" + key +
                                "' must be a string");
  }
  return v.get<std::string>();
}

std::string RequiredString(const InstanceSpec& spec, const char* key) {
  if (!spec.params.contains(key)) {
    throw std::invalid_argument(spec.name + ": missing parameter '" + key +
                                "'");
  }
  return StringParam(spec, key, "");
}

std::optional<double> OptionalReal(const InstanceSpec& spec, const char* key) {
  if (!spec.params.contains(key)) return std::nullopt;
  const nlohmann::json& v = spec.params.at(key);
  if (!v.is_number()) {
    throw std::invalid_argument(spec.name + ": parameter '" + key +
                                "' must be a number");
  }
  return v.get<double>();
}

std::size_t OptionalCount(const InstanceSpec& spec, const char* key,
                          std::size_t fallback) {
  if (!spec.params.contains(key)) return fallback;
  const nlohmann::json& v = spec.params.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument(spec.name + ": parameter '" + key +
                                "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

fs::path Locate(const std::string& name, const fs::path& data_dir) {
  const fs::path p(name);
  if (p.is_relative() && !fs::exists(p) && fs::exists(data_dir / p)) {
    return data_dir / p;
  }
  if (!fs::exists(p)) {
    throw std::invalid_argument("dataset file not found: " + name +
                                " (searched . and " + data_dir.string() + ")");
  }
  return p;
}

std::vector<ElementId> Iota(std::size_t n) {
  std::vector<ElementId> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = ElementId(t);
  return out;
}

Instance EdgeListInstance(const InstanceSpec& spec, const fs::path& data_dir) {
  const fs::path path =
      Locate(spec.name == "facebook"
                 ? StringParam(spec, "path", "facebook_combined.txt")
                 : RequiredString(spec, "path"),
             data_dir);
  const EdgeListGraph graph = LoadEdgeList(path);
  Instance out;
  out.spec = spec;
  out.oracle =
      std::make_shared<DominatingOracle>(graph.vertex_count, graph.edges);
  out.stream = Iota(graph.vertex_count);
  return out;
}

Instance GeoInstance(const InstanceSpec& spec, const fs::path& data_dir) {
  const fs::path path = Locate(RequiredString(spec, "path"), data_dir);
  GeoPointSet points = LoadPointsCsv(path, StringParam(spec, "lat", "Lat"),
                                     StringParam(spec, "lon", "Lon"),
                                     OptionalCount(spec, "limit", 0));
  if (spec.params.contains("sample")) {
    points = Subsample(points, OptionalCount(spec, "sample", 0),
                       OptionalCount(spec, "seed", 0));
  }
  if (points.empty()) throw std::invalid_argument(spec.name + ": no points");
  const std::string metric_name = StringParam(spec, "metric", "haversine");
  Metric metric;
  if (metric_name == "haversine") {
    metric = Metric::kHaversine;
  } else if (metric_name == "euclidean") {
    metric = Metric::kEuclidean;
  } else {
    throw std::invalid_argument(spec.name + ": unknown metric '" + metric_name +
                                "'");
  }
  auto metric_points =
      std::make_shared<const PointMetric>(metric, 2, FlattenPoints(points));
  Instance out;
  out.spec = spec;
  if (spec.name == "geo-kmedoid") {
    // The anchor e0 is the first point of the dataset.
    out.oracle = std::make_shared<KMedoidOracle>(metric_points, ElementId(0));
  } else {
    LogDetOptions options;
    if (auto alpha = OptionalReal(spec, "alpha")) options.alpha = *alpha;
    options.bandwidth = OptionalReal(spec, "bandwidth");
    out.oracle = std::make_shared<LogDetOracle>(metric_points, options);
  }
  out.stream = Iota(points.size());
  return out;
}

Instance RecommendationInstance(const InstanceSpec& spec,
                                const fs::path& data_dir) {
  const fs::path path = Locate(RequiredString(spec, "path"), data_dir);
  FeatureMatrix features = LoadFeatureMatrix(path);
  std::mt19937_64 rng(OptionalCount(spec, "seed", 0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> user(features.dimension);
  for (double& u : user) u = unit(rng);
  const std::size_t n = features.rows.size();
  Instance out;
  out.spec = spec;
  out.oracle = std::make_shared<RecommendationOracle>(
      std::move(features.rows), std::move(user),
      OptionalReal(spec, "mix").value_or(0.95));
  out.stream = Iota(n);
  return out;
}

}  // namespace

fs::path DefaultDataDir() {
  const char* env = std::getenv(kDataDirEnv);
  return env != nullptr && *env != '\0' ? fs::path(env) : fs::path("data");
}

nlohmann::json ParseParamList(const std::string& text) {
  nlohmann::json out = nlohmann::json::object();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("bad parameter '" + item +
                                  "' (expected key=value)");
    }
    out[item.substr(0, eq)] = ParseScalar(item.substr(eq + 1));
  }
  return out;
}

InstanceSpec ParseInstanceArg(const std::string& text) {
  if (text.ends_with(".json")) {
    const std::string body = ReadFile(text);
    try {
      return SpecFromJson(nlohmann::json::parse(body));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(text + ": " + e.what());
    }
  }
  const std::size_t colon = text.find(':');
  InstanceSpec spec;
  spec.name = text.substr(0, colon);
  if (colon != std::string::npos) {
    spec.params = ParseParamList(text.substr(colon + 1));
  }
  if (spec.name.empty()) throw std::invalid_argument("empty instance name");
  return spec;
}

const std::vector<std::string>& DatasetNames() {
  static const std::vector<std::string> kNames = {
      "edge-list", "facebook", "geo-kmedoid", "geo-logdet", "recommendation"};
  return kNames;
}

Instance ResolveInstance(const InstanceSpec& spec, const fs::path& data_dir) {
  if (spec.name == "edge-list" || spec.name == "facebook") {
    return EdgeListInstance(spec, data_dir);
  }
  if (spec.name == "geo-kmedoid" || spec.name == "geo-logdet") {
    return GeoInstance(spec, data_dir);
  }
  if (spec.name == "recommendation") {
    return RecommendationInstance(spec, data_dir);
  }
  return GenerateInstance(spec);
}

}  // namespace consub
