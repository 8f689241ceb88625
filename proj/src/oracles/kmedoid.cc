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

#include "consub/oracles/kmedoid.h"

#include <algorithm>
#include <stdexcept>

namespace consub {

namespace {

// Keeps min over S + e0 of d(., v) for every point v. f(S) is the mean of the
// per-point improvements d(e0, v) - current_min[v], each of which is >= 0, so
// the accumulated value is monotone even in floating point.
class KMedoidEvaluator : public SetEvaluator {
 public:
  explicit KMedoidEvaluator(const KMedoidOracle& oracle)
      : SetEvaluator(oracle),
        kmedoid_(oracle),
        current_min_(oracle.anchor_distances()) {}

 protected:
  double ComputeGain(ElementId x) const override {
    const PointMetric& pts = kmedoid_.points();
    double total = 0.0;
    for (std::size_t v = 0; v < pts.size(); ++v) {
      const double d = pts.Distance(Index(x), v);
      if (d < current_min_[v]) total += current_min_[v] - d;
    }
    return total / static_cast<double>(pts.size());
  }

  double OnInsert(ElementId x) override {
    const PointMetric& pts = kmedoid_.points();
    for (std::size_t v = 0; v < pts.size(); ++v) {
      current_min_[v] = std::min(current_min_[v], pts.Distance(Index(x), v));
    }
    return Current();
  }

  void OnClear() override { current_min_ = kmedoid_.anchor_distances(); }

 private:
  double Current() const {
    const auto& d0 = kmedoid_.anchor_distances();
    double total = 0.0;
    for (std::size_t v = 0; v < d0.size(); ++v)
      total += d0[v] - current_min_[v];
    return total / static_cast<double>(d0.size());
  }

  const KMedoidOracle& kmedoid_;
  std::vector<double> current_min_;
};

}  // namespace

KMedoidOracle::KMedoidOracle(std::shared_ptr<const PointMetric> points,
                             ElementId anchor)
    : points_(std::move(points)), anchor_(anchor) {
  if (points_ == nullptr || points_->size() == 0) {
    throw std::invalid_argument("kmedoid: empty point set");
  }
  if (Index(anchor_) >= points_->size()) {
    throw std::invalid_argument("kmedoid: anchor out of range");
  }
  anchor_dist_.resize(points_->size());
  for (std::size_t v = 0; v < points_->size(); ++v) {
    anchor_dist_[v] = points_->Distance(Index(anchor_), v);
  }
}

double KMedoidOracle::Evaluate(std::span<const ElementId> set) const {
  const std::size_t n = points_->size();
  double total = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    double best = anchor_dist_[v];
    for (ElementId e : set)
      best = std::min(best, points_->Distance(Index(e), v));
    total += anchor_dist_[v] - best;
  }
  return total / static_cast<double>(n);
}

std::unique_ptr<SetEvaluator> KMedoidOracle::NewEvaluator() const {
  return std::make_unique<KMedoidEvaluator>(*this);
}

}  // namespace consub
