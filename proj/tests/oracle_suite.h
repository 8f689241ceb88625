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

#ifndef CONSUB_TESTS_ORACLE_SUITE_H_
#define CONSUB_TESTS_ORACLE_SUITE_H_

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "consub/oracles/kmedoid.h"
#include "consub/oracles/logdet.h"
#include "consub/oracles/metric.h"
#include "consub/oracles/recommendation.h"
#include "test_util.h"

// Randomized checks over all six oracles, shared by the property tests and
// the acceptance binary.
namespace consub::testing {

inline std::shared_ptr<const PointMetric> RandomPoints(std::size_t n,
                                                       Metric metric,
                                                       std::mt19937_64& rng) {
  std::vector<double> coords(2 * n);
  if (metric == Metric::kHaversine) {
    std::uniform_real_distribution<double> lat(41.8, 42.0), lon(12.4, 12.6);
    for (std::size_t i = 0; i < n; ++i) {
      coords[2 * i] = lat(rng);
      coords[2 * i + 1] = lon(rng);
    }
  } else {
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (double& c : coords) c = u(rng);
  }
  return std::make_shared<const PointMetric>(metric, 2, std::move(coords));
}

inline std::shared_ptr<RecommendationOracle> RandomRecommendation(
    std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.2, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> movies(n, std::vector<double>(6));
  for (auto& m : movies) {
    for (double& x : m) x = g(rng);
  }
  std::vector<double> user(6);
  for (double& x : user) x = u(rng);
  return std::make_shared<RecommendationOracle>(std::move(movies),
                                                std::move(user));
}

struct NamedOracle {
  std::string name;
  std::shared_ptr<const ValueOracle> oracle;
};

inline std::vector<NamedOracle> AllOracles(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NamedOracle> out;
  out.push_back({"coverage", RandomCoverage(n, n / 2 + 3, rng)});
  out.push_back({"dominating", RandomGraph(n, 8.0 / n, rng)});
  out.push_back({"modular", RandomModular(n, rng)});
  out.push_back(
      {"kmedoid", std::make_shared<KMedoidOracle>(
                      RandomPoints(n, Metric::kHaversine, rng), E(0))});
  LogDetOptions options;
  options.max_set_size = n;
  out.push_back(
      {"logdet", std::make_shared<LogDetOracle>(
                     RandomPoints(n, Metric::kEuclidean, rng), options)});
  out.push_back({"recommendation", RandomRecommendation(n, rng)});
  return out;
}

inline double Relative(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Samples triples (X subset of Y, e not in Y) and counts those violating
// f(e | X) >= f(e | Y) or f(e | X) >= 0 by more than `tol`.
inline int CountSubmodularityFailures(const ValueOracle& f, std::size_t ground,
                                      int triples, std::uint64_t seed,
                                      double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(
      0, static_cast<std::uint32_t>(ground - 1));
  std::uniform_int_distribution<int> size(0, 12);
  std::bernoulli_distribution keep(0.5);
  int failures = 0;
  for (int trial = 0; trial < triples; ++trial) {
    ElementSet y;
    const int target = size(rng);
    while (static_cast<int>(y.size()) < target) y.Insert(E(pick(rng)));
    ElementSet x;
    for (ElementId v : y) {
      if (keep(rng)) x.Insert(v);
    }
    ElementId e;
    do {
      e = E(pick(rng));
    } while (y.Contains(e));
    const double gx = f.Eval(x.With(e)) - f.Eval(x);
    const double gy = f.Eval(y.With(e)) - f.Eval(y);
    if (gx < gy - tol || gx < -tol) ++failures;
  }
  return failures;
}

// Inserts `insertions` random elements (ground must exceed insertions by at
// least 100) and returns the largest relative gap between cached values or
// gains and from-scratch evaluation.
inline double IncrementalWorstError(const ValueOracle& f, std::size_t ground,
                                    std::size_t insertions,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ElementId> order = Iota(ground);
  std::shuffle(order.begin(), order.end(), rng);
  auto ev = f.NewEvaluator();
  double worst = 0.0;
  for (std::size_t step = 1; step <= insertions; ++step) {
    ev->Add(order[step - 1]);
    const bool check = step <= 20 || step % 125 == 0 || step == insertions;
    if (!check) continue;
    const double scratch = f.Eval(ev->members());
    worst = std::max(worst, Relative(ev->value(), scratch));
    const ElementId probe = order[insertions + step % 100];
    const double gain = f.Eval(ev->members().With(probe)) - scratch;
    worst = std::max(worst, Relative(ev->Gain(probe), gain));
  }
  return worst;
}

// Determinant by Gaussian elimination with partial pivoting.
inline double NaiveDeterminant(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double m = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= m * a[c][j];
    }
  }
  return det;
}

// Largest relative gap between the log-det oracle and log(det(I + aK)) built
// naively, over `trials` random point sets and subsets of size 1..8.
inline double LogDetWorstError(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> h(0.5, 5.0);
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n = 12;
    auto points = RandomPoints(n, Metric::kEuclidean, rng);
    LogDetOptions options;
    options.bandwidth = h(rng);
    const LogDetOracle f(points, options);
    std::vector<ElementId> all = Iota(n);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size(rng));
    std::vector<std::vector<double>> m(all.size(),
                                       std::vector<double>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        const double d = points->Distance(Index(all[i]), Index(all[j]));
        m[i][j] =
            (i == j ? 1.0 : 0.0) +
            options.alpha *
                std::exp(-d * d / (*options.bandwidth * *options.bandwidth));
      }
    }
    const double expected = std::log(NaiveDeterminant(m));
    worst =
        std::max(worst, std::abs(f.Eval(all) - expected) / std::abs(expected));
  }
  return worst;
}

}  // namespace consub::testing

#endif  // CONSUB_TESTS_ORACLE_SUITE_H_
