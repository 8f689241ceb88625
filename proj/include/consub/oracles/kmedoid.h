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

#ifndef CONSUB_ORACLES_KMEDOID_H_
#define CONSUB_ORACLES_KMEDOID_H_

#include <memory>
#include <vector>

#include "consub/oracle.h"
#include "consub/oracles/metric.h"

namespace consub {

// k-medoid objective turned into a monotone submodular function with an
// auxiliary anchor point e0:
//   L(S) = (1/|V|) sum_v min_{e in S} d(e, v)
//   f(S) = L({e0}) - L(S + e0)
// L is taken over every loaded point, not only the ones that have arrived.
class KMedoidOracle : public ValueOracle {
 public:
  // Throws std::invalid_argument for an empty point set or a bad anchor.
  KMedoidOracle(std::shared_ptr<const PointMetric> points, ElementId anchor);

  std::string_view name() const override { return "kmedoid"; }
  std::size_t ground_size() const override { return points_->size(); }
  ElementId anchor() const { return anchor_; }
  const PointMetric& points() const { return *points_; }
  // d(e0, v) for every v.
  const std::vector<double>& anchor_distances() const { return anchor_dist_; }

  std::unique_ptr<SetEvaluator> NewEvaluator() const override;

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::shared_ptr<const PointMetric> points_;
  ElementId anchor_;
  std::vector<double> anchor_dist_;
};

}  // namespace consub

#endif  // CONSUB_ORACLES_KMEDOID_H_
