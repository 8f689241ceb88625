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

#ifndef CONSUB_ORACLES_LOGDET_H_
#define CONSUB_ORACLES_LOGDET_H_

#include <memory>
#include <optional>
#include <vector>

#include "consub/oracle.h"
#include "consub/oracles/metric.h"

namespace consub {

struct LogDetOptions {
  double alpha = 10.0;
  // Kernel bandwidth h. Defaults to the median pairwise distance.
  std::optional<double> bandwidth;
  // Largest |S| accepted by from-scratch Eval.
  std::size_t max_set_size = 64;
};

// f(S) = log det(I + alpha * K_{S,S}) with the Gaussian kernel
// K_ij = exp(-d(i,j)^2 / h^2).
class LogDetOracle : public ValueOracle {
 public:
  LogDetOracle(std::shared_ptr<const PointMetric> points,
               LogDetOptions options = {});

  std::string_view name() const override { return "logdet"; }
  std::size_t ground_size() const override { return points_->size(); }
  double alpha() const { return alpha_; }
  double bandwidth() const { return bandwidth_; }
  std::size_t max_set_size() const { return max_set_size_; }

  double Kernel(std::size_t i, std::size_t j) const;

  // Incremental Cholesky evaluator; its set size is not capped.
  std::unique_ptr<SetEvaluator> NewEvaluator() const override;

 protected:
  // Throws std::invalid_argument when |S| > max_set_size(), NumericError when
  // the Cholesky factorization meets a non-positive pivot.
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::shared_ptr<const PointMetric> points_;
  double alpha_;
  double bandwidth_;
  std::size_t max_set_size_;
};

// log det of a symmetric positive-definite matrix (row-major, n x n) via
// Cholesky. Throws NumericError naming the first failing pivot.
double CholeskyLogDet(std::vector<double> matrix, std::size_t n);

}  // namespace consub

#endif  // CONSUB_ORACLES_LOGDET_H_
