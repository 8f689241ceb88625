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

#include "consub/oracles/logdet.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "consub/errors.h"

namespace consub {

namespace {

// Grows the Cholesky factor L of M = I + alpha K_{S,S} one row at a time.
// Adding x appends the row [c, sqrt(d)] where L c = alpha K_{S,x} and
// d = 1 + alpha - |c|^2 is the Schur complement, so f(x | S) = log d.
class LogDetEvaluator : public SetEvaluator {
 public:
  explicit LogDetEvaluator(const LogDetOracle& oracle)
      : SetEvaluator(oracle), logdet_(oracle) {}

 protected:
  double ComputeGain(ElementId x) const override {
    std::vector<double> c;
    return std::log(Schur(x, c));
  }

  double OnInsert(ElementId x) override {
    std::vector<double> c;
    const double d = Schur(x, c);
    c.push_back(std::sqrt(d));
    rows_.push_back(std::move(c));
    return value() + std::log(d);
  }

  void OnClear() override { rows_.clear(); }

 private:
  // Uses only the rows already present, i.e. the members inserted before x.
  double Schur(ElementId x, std::vector<double>& c) const {
    const ElementSet& s = members();
    const std::size_t m = rows_.size();
    c.assign(m, 0.0);
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double acc = logdet_.alpha() * logdet_.Kernel(Index(s[i]), Index(x));
      for (std::size_t j = 0; j < i; ++j) acc -= rows_[i][j] * c[j];
      c[i] = acc / rows_[i][i];
      norm += c[i] * c[i];
    }
    const double d = 1.0 + logdet_.alpha() - norm;
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw NumericError("logdet: non-positive Schur complement", m);
    }
    return d;
  }

  const LogDetOracle& logdet_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace

double CholeskyLogDet(std::vector<double> a, std::size_t n) {
  double logdet = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a[j * n + j];
    for (std::size_t p = 0; p < j; ++p) diag -= a[j * n + p] * a[j * n + p];
    if (!(diag > 0.0) || !std::isfinite(diag)) {
      throw NumericError("Cholesky: matrix not positive definite at pivot " +
                             std::to_string(j),
                         j);
    }
    const double ljj = std::sqrt(diag);
    a[j * n + j] = ljj;
    logdet += 2.0 * std::log(ljj);
    for (std::size_t i = j + 1; i < n; ++i) {
      double acc = a[i * n + j];
      for (std::size_t p = 0; p < j; ++p) acc -= a[i * n + p] * a[j * n + p];
      a[i * n + j] = acc / ljj;
    }
  }
  return logdet;
}

LogDetOracle::LogDetOracle(std::shared_ptr<const PointMetric> points,
                           LogDetOptions options)
    : points_(std::move(points)),
      alpha_(options.alpha),
      max_set_size_(options.max_set_size) {
  if (points_ == nullptr || points_->size() == 0) {
    throw std::invalid_argument("logdet: empty point set");
  }
  if (!(alpha_ > 0.0)) throw std::invalid_argument("logdet: alpha must be > 0");
  if (options.bandwidth) {
    bandwidth_ = *options.bandwidth;
  } else {
    bandwidth_ = MedianPairwiseDistance(*points_);
    // All points coincide: any bandwidth gives the same kernel.
    if (bandwidth_ == 0.0) bandwidth_ = 1.0;
  }
  if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_)) {
    throw std::invalid_argument("logdet: bandwidth must be positive");
  }
}

double LogDetOracle::Kernel(std::size_t i, std::size_t j) const {
  if (i == j) return 1.0;
  const double d = points_->Distance(i, j) / bandwidth_;
  return std::exp(-d * d);
}

double LogDetOracle::Evaluate(std::span<const ElementId> set) const {
  const std::size_t n = set.size();
  if (n > max_set_size_) {
    throw std::invalid_argument("logdet: |S| = " + std::to_string(n) +
                                " exceeds max_set_size " +
                                std::to_string(max_set_size_));
  }
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] =
          (i == j ? 1.0 : 0.0) + alpha_ * Kernel(Index(set[i]), Index(set[j]));
    }
  }
  return CholeskyLogDet(std::move(m), n);
}

std::unique_ptr<SetEvaluator> LogDetOracle::NewEvaluator() const {
  return std::make_unique<LogDetEvaluator>(*this);
}

}  // namespace consub
