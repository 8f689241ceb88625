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

#include "consub/generators/generators.h"

#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>

#include "consub/oracles/coverage.h"
#include "consub/oracles/modular.h"

namespace consub {

namespace {

constexpr int kMaxSwappingHardI = 20;
constexpr std::size_t kMaxSieveLength = 900;

std::size_t PowerOfTwo(int i) { return std::size_t{1} << i; }

std::size_t SwappingHardSingletonId(int i, int j, std::size_t l) {
  return static_cast<std::size_t>(j) * (PowerOfTwo(i) + 1) + l;
}

void CheckSwappingHard(int i, double delta) {
  if (i < 1 || i > kMaxSwappingHardI) {
    throw std::invalid_argument("swapping-hard: i must be in [1, " +
                                std::to_string(kMaxSwappingHardI) + "]");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("swapping-hard: delta must be in (0, 1)");
  }
}

const nlohmann::json& Param(const InstanceSpec& spec, const char* key) {
  if (!spec.params.contains(key)) {
    throw std::invalid_argument(spec.name + ": missing parameter '" + key +
                                "'");
  }
  return spec.params.at(key);
}

long long IntParam(const InstanceSpec& spec, const char* key) {
  const nlohmann::json& v = Param(spec, key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(spec.name + ": parameter '" + key +
                                "' must be an integer");
  }
  return v.get<long long>();
}

double RealParam(const InstanceSpec& spec, const char* key) {
  const nlohmann::json& v = Param(spec, key);
  if (!v.is_number()) {
    throw std::invalid_argument(spec.name + ": parameter '" + key +
                                "' must be a number");
  }
  return v.get<double>();
}

std::size_t CountParam(const InstanceSpec& spec, const char* key) {
  const long long v = IntParam(spec, key);
  if (v < 0) {
    throw std::invalid_argument(spec.name + ": parameter '" + key +
                                "' must be non-negative");
  }
  return static_cast<std::size_t>(v);
}

int SmallIntParam(const InstanceSpec& spec, const char* key) {
  const long long v = IntParam(spec, key);
  if (v < -1000000 || v > 1000000) {
    throw std::invalid_argument(spec.name + ": parameter '" + key +
                                "' out of range");
  }
  return static_cast<int>(v);
}

std::vector<ElementId> Iota(std::size_t n) {
  std::vector<ElementId> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = ElementId(t);
  return out;
}

}  // namespace

Instance GenSwappingHard(int i, double delta) {
  CheckSwappingHard(i, delta);
  const std::size_t k = PowerOfTwo(i);
  const std::size_t bundles = static_cast<std::size_t>(i) + 1;

  std::vector<double> weights(bundles * k);
  for (std::size_t j = 0; j < bundles; ++j) {
    const double w = j == static_cast<std::size_t>(i)
                         ? std::ldexp(1.0, i) - delta
                         : std::ldexp(1.0, static_cast<int>(j));
    for (std::size_t l = 0; l < k; ++l) weights[j * k + l] = w;
  }

  std::vector<std::vector<std::uint32_t>> items;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < bundles; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      items.push_back({static_cast<std::uint32_t>(j * k + l)});
      labels.push_back("{e_" + std::to_string(l + 1) + "^" + std::to_string(j) +
                       "}");
    }
    if (j == static_cast<std::size_t>(i)) break;
    std::vector<std::uint32_t> bundle(k);
    for (std::size_t l = 0; l < k; ++l) {
      bundle[l] = static_cast<std::uint32_t>(j * k + l);
    }
    items.push_back(std::move(bundle));
    labels.push_back("E^" + std::to_string(j));
  }

  Instance out;
  out.spec = {"swapping-hard", {{"i", i}, {"delta", delta}}};
  out.oracle = std::make_shared<WeightedCoverageOracle>(std::move(weights),
                                                        std::move(items));
  out.stream = Iota(out.oracle->ground_size());
  out.k = k;
  out.labels = std::move(labels);
  return out;
}

double SwappingHardSwappingValue(int i) {
  CheckSwappingHard(i, 0.5);
  return static_cast<double>(PowerOfTwo(i)) * std::ldexp(1.0, i - 1);
}

std::vector<ElementId> SwappingHardSingletons(int i, int j) {
  CheckSwappingHard(i, 0.5);
  if (j < 0 || j > i) throw std::invalid_argument("swapping-hard: bad bundle");
  std::vector<ElementId> out;
  for (std::size_t l = 0; l < PowerOfTwo(i); ++l) {
    out.push_back(ElementId(SwappingHardSingletonId(i, j, l)));
  }
  return out;
}

ElementSet SwappingHardReferenceSet(int i) {
  CheckSwappingHard(i, 0.5);
  const std::size_t k = PowerOfTwo(i);
  ElementSet out;
  for (int j = 0; j < i; ++j) {
    out.Insert(ElementId(SwappingHardSingletonId(i, j, k)));
  }
  for (std::size_t l = 0; l + static_cast<std::size_t>(i) < k; ++l) {
    out.Insert(ElementId(SwappingHardSingletonId(i, i, l)));
  }
  return out;
}

double SwappingHardReferenceValue(int i, double delta) {
  CheckSwappingHard(i, delta);
  const double k = static_cast<double>(PowerOfTwo(i));
  const double top = std::ldexp(1.0, i);
  return k * (top - 1.0) + (k - i) * (top - delta);
}

double SwappingHardRatioBound(int i, double delta) {
  return 4.0 - (2.0 / std::ldexp(1.0, i)) * (delta + 1.0 + i);
}

Instance GenGreedyInstability(int i, double delta, std::size_t k) {
  if (i < 2 || i > 1000) {
    throw std::invalid_argument("greedy-instability: i must be in [2, 1000]");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("greedy-instability: delta must be in (0, 1)");
  }
  if (k < 1 || k > static_cast<std::size_t>(i)) {
    throw std::invalid_argument("greedy-instability: k must be in [1, i]");
  }
  const std::uint32_t side = static_cast<std::uint32_t>(i) + 1;
  auto item = [side](std::uint32_t a, std::uint32_t b) { return a * side + b; };

  std::vector<double> weights(side * side, 1.0);
  weights[item(0, 0)] = 0.0;
  for (std::uint32_t a = 1; a < side; ++a) {
    weights[item(a, 0)] = delta * (2.0 * a + 1.0);
  }
  for (std::uint32_t b = 1; b < side; ++b)
    weights[item(0, b)] = delta * 2.0 * b;

  std::vector<std::vector<std::uint32_t>> items;
  std::vector<std::string> labels;
  for (std::uint32_t x = 1; x < side; ++x) {
    std::vector<std::uint32_t> column, row;
    for (std::uint32_t y = 0; y < side; ++y) {
      column.push_back(item(y, x));
      row.push_back(item(x, y));
    }
    items.push_back(std::move(column));
    labels.push_back("C_" + std::to_string(x));
    items.push_back(std::move(row));
    labels.push_back("R_" + std::to_string(x));
  }

  Instance out;
  out.spec = {"greedy-instability", {{"i", i}, {"delta", delta}, {"k", k}}};
  out.oracle = std::make_shared<WeightedCoverageOracle>(std::move(weights),
                                                        std::move(items));
  out.stream = Iota(out.oracle->ground_size());
  out.k = k;
  out.labels = std::move(labels);
  return out;
}

ElementId GreedyInstabilityRow(int a) { return ElementId(2 * (a - 1) + 1); }
ElementId GreedyInstabilityColumn(int b) { return ElementId(2 * (b - 1)); }

Instance GenSieveInstability(std::size_t n, SieveMode mode, std::size_t k) {
  if (n > kMaxSieveLength) {
    throw std::invalid_argument("sieve-instability: n must be <= " +
                                std::to_string(kMaxSieveLength));
  }
  if (k < 1) throw std::invalid_argument("sieve-instability: k must be >= 1");
  std::vector<double> weights(n);
  std::vector<std::string> labels(n);
  for (std::size_t t = 1; t <= n; ++t) {
    double w;
    if (mode == SieveMode::kDoubling) {
      w = std::ldexp(1.0, static_cast<int>(t));
    } else {
      const std::size_t block = (t + k - 1) / k;
      w = std::pow(static_cast<double>(k), static_cast<double>(block));
    }
    // Sieve thresholds reach 2 k max_e f({e}); keep those finite too.
    if (!std::isfinite(w) || !std::isfinite(2.0 * static_cast<double>(k) * w)) {
      throw std::invalid_argument("sieve-instability: weight of e_" +
                                  std::to_string(t) + " overflows a double");
    }
    weights[t - 1] = w;
    labels[t - 1] = "e_" + std::to_string(t);
  }
  Instance out;
  out.spec = {"sieve-instability",
              {{"n", n}, {"mode", SieveModeName(mode)}, {"k", k}}};
  out.oracle = std::make_shared<ModularOracle>(std::move(weights));
  out.stream = Iota(n);
  out.k = k;
  out.labels = std::move(labels);
  return out;
}

SieveMode ParseSieveMode(const std::string& text) {
  if (text == "doubling") return SieveMode::kDoubling;
  if (text == "blockwise") return SieveMode::kBlockwise;
  throw std::invalid_argument("sieve-instability: unknown mode '" + text +
                              "' (expected doubling or blockwise)");
}

std::string SieveModeName(SieveMode mode) {
  return mode == SieveMode::kDoubling ? "doubling" : "blockwise";
}

Instance GenerateInstance(const InstanceSpec& spec) {
  if (spec.name == "swapping-hard") {
    return GenSwappingHard(SmallIntParam(spec, "i"), RealParam(spec, "delta"));
  }
  if (spec.name == "greedy-instability") {
    return GenGreedyInstability(SmallIntParam(spec, "i"),
                                RealParam(spec, "delta"),
                                CountParam(spec, "k"));
  }
  if (spec.name == "sieve-instability") {
    const nlohmann::json& mode = Param(spec, "mode");
    if (!mode.is_string()) {
      throw std::invalid_argument("sieve-instability: 'mode' must be a string");
    }
    return GenSieveInstability(CountParam(spec, "n"),
                               ParseSieveMode(mode.get<std::string>()),
                               CountParam(spec, "k"));
  }
  throw std::invalid_argument("unknown generator '" + spec.name + "'");
}

const std::vector<std::string>& GeneratorNames() {
  static const std::vector<std::string> kNames = {
      "swapping-hard", "greedy-instability", "sieve-instability"};
  return kNames;
}

}  // namespace consub
