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

#include "consub/oracles/recommendation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace consub {

namespace {

class RecommendationEvaluator : public SetEvaluator {
 public:
  explicit RecommendationEvaluator(const RecommendationOracle& oracle)
      : SetEvaluator(oracle), rec_(oracle), best_(oracle.ground_size(), 0.0) {}

 protected:
  double ComputeGain(ElementId x) const override {
    double cover = 0.0;
    for (std::size_t m = 0; m < best_.size(); ++m) {
      const double dot = rec_.Dot(m, Index(x));
      if (dot > best_[m]) cover += dot - best_[m];
    }
    return (1.0 - rec_.mix()) * rec_.UserScore(Index(x)) + rec_.mix() * cover;
  }

  double OnInsert(ElementId x) override {
    linear_ += rec_.UserScore(Index(x));
    for (std::size_t m = 0; m < best_.size(); ++m) {
      best_[m] = std::max(best_[m], rec_.Dot(m, Index(x)));
    }
    double cover = 0.0;
    for (double b : best_) cover += b;
    return (1.0 - rec_.mix()) * linear_ + rec_.mix() * cover;
  }

  void OnClear() override {
    std::fill(best_.begin(), best_.end(), 0.0);
    linear_ = 0.0;
  }

 private:
  const RecommendationOracle& rec_;
  std::vector<double> best_;
  double linear_ = 0.0;
};

}  // namespace

RecommendationOracle::RecommendationOracle(
    std::vector<std::vector<double>> movie_vectors,
    std::vector<double> user_vector, double mix)
    : movies_(std::move(movie_vectors)),
      user_(std::move(user_vector)),
      mix_(mix) {
  if (!(mix_ >= 0.0 && mix_ <= 1.0)) {
    throw std::invalid_argument("recommendation: mix must lie in [0, 1]");
  }
  for (std::size_t m = 0; m < movies_.size(); ++m) {
    if (movies_[m].size() != user_.size()) {
      throw std::invalid_argument(
          "recommendation: movie " + std::to_string(m) + " has dimension " +
          std::to_string(movies_[m].size()) + ", user vector has " +
          std::to_string(user_.size()));
    }
    for (double& x : movies_[m]) {
      if (!std::isfinite(x)) {
        throw std::invalid_argument("recommendation: non-finite feature");
      }
      if (x < 0.0) {
        x = 0.0;
        ++clamped_;
      }
    }
  }
  user_scores_.resize(movies_.size());
  for (std::size_t s = 0; s < movies_.size(); ++s) {
    double dot = 0.0;
    for (std::size_t d = 0; d < user_.size(); ++d)
      dot += user_[d] * movies_[s][d];
    user_scores_[s] = std::max(dot, 0.0);
  }
}

double RecommendationOracle::Dot(std::size_t a, std::size_t b) const {
  double dot = 0.0;
  for (std::size_t d = 0; d < user_.size(); ++d)
    dot += movies_[a][d] * movies_[b][d];
  return dot;
}

double RecommendationOracle::Evaluate(std::span<const ElementId> set) const {
  double linear = 0.0;
  for (ElementId s : set) linear += user_scores_[Index(s)];
  double cover = 0.0;
  for (std::size_t m = 0; m < movies_.size(); ++m) {
    double best = 0.0;
    for (ElementId s : set) best = std::max(best, Dot(m, Index(s)));
    cover += best;
  }
  return (1.0 - mix_) * linear + mix_ * cover;
}

std::unique_ptr<SetEvaluator> RecommendationOracle::NewEvaluator() const {
  return std::make_unique<RecommendationEvaluator>(*this);
}

}  // namespace consub
