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

#ifndef CONSUB_ORACLES_RECOMMENDATION_H_
#define CONSUB_ORACLES_RECOMMENDATION_H_

#include <vector>

#include "consub/oracle.h"

namespace consub {

// Personalized recommendation objective over movie feature vectors:
//   f(S) = (1 - mix) * sum_{s in S} max(<u, v_s>, 0)
//        + mix * sum_{m in M} max(0, max_{s in S} <v_m, v_s>)
// Elements are the movies M. Negative movie-vector entries are clamped to 0
// on construction, which keeps the facility-location term monotone.
class RecommendationOracle : public ValueOracle {
 public:
  // Throws std::invalid_argument on dimension mismatch or mix outside [0, 1].
  RecommendationOracle(std::vector<std::vector<double>> movie_vectors,
                       std::vector<double> user_vector, double mix = 0.95);

  std::string_view name() const override { return "recommendation"; }
  std::size_t ground_size() const override { return movies_.size(); }
  std::size_t dimension() const { return user_.size(); }
  double mix() const { return mix_; }
  std::size_t clamped_entries() const { return clamped_; }

  double Dot(std::size_t a, std::size_t b) const;
  // max(<u, v_s>, 0)
  double UserScore(std::size_t s) const { return user_scores_[s]; }

  std::unique_ptr<SetEvaluator> NewEvaluator() const override;

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<std::vector<double>> movies_;
  std::vector<double> user_;
  double mix_;
  std::size_t clamped_ = 0;
  std::vector<double> user_scores_;
};

}  // namespace consub

#endif  // CONSUB_ORACLES_RECOMMENDATION_H_
