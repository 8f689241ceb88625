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

#include <cmath>
#include <memory>
#include <numeric>

#include "consub/errors.h"
#include "consub/oracles/coverage.h"
#include "consub/oracles/dominating.h"
#include "consub/oracles/kmedoid.h"
#include "consub/oracles/logdet.h"
#include "consub/oracles/metric.h"
#include "consub/oracles/modular.h"
#include "consub/oracles/recommendation.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace consub {
namespace {

using ::consub::testing::E;

std::shared_ptr<const PointMetric> Line(std::vector<double> xs) {
  return std::make_shared<const PointMetric>(Metric::kEuclidean, 1,
                                             std::move(xs));
}

TEST(CoverageTest, ThreeItemExample) {
  // Weights (1, 2, 3); u = {0, 1}, v = {1, 2}. {u, v} covers all three.
  const WeightedCoverageOracle f({1.0, 2.0, 3.0}, {{0, 1}, {1, 2}});
  EXPECT_EQ(f.Eval(ElementSet{}), 0.0);
  EXPECT_EQ(f.Eval(ElementSet{E(0)}), 3.0);
  EXPECT_EQ(f.Eval(ElementSet{E(1)}), 5.0);
  EXPECT_EQ(f.Eval(ElementSet{E(0), E(1)}), 6.0);
}

TEST(CoverageTest, DuplicateItemsInListCountOnce) {
  const WeightedCoverageOracle f({2.0}, {{0, 0, 0}});
  EXPECT_EQ(f.Eval(ElementSet{E(0)}), 2.0);
  EXPECT_EQ(f.items(E(0)).size(), 1u);
}

TEST(CoverageTest, RejectsBadInput) {
  EXPECT_THROW(WeightedCoverageOracle({-1.0}, {{0}}), std::invalid_argument);
  EXPECT_THROW(WeightedCoverageOracle({1.0}, {{1}}), std::invalid_argument);
  const WeightedCoverageOracle f({1.0}, {{0}});
  const ElementId unknown[] = {E(3)};
  EXPECT_THROW(f.Eval(unknown), std::invalid_argument);
}

TEST(CoverageTest, EvaluatorTracksRemovals) {
  const WeightedCoverageOracle f({1.0, 2.0, 3.0}, {{0, 1}, {1, 2}, {2}});
  auto ev = f.NewEvaluator();
  ev->Add(E(0));
  ev->Add(E(1));
  ev->Add(E(2));
  EXPECT_EQ(ev->value(), 6.0);
  EXPECT_EQ(ev->Loss(E(2)), 0.0);
  EXPECT_EQ(ev->Loss(E(0)), 1.0);
  ev->Remove(E(1));
  EXPECT_EQ(ev->value(), 6.0);
  ev->Remove(E(2));
  EXPECT_EQ(ev->value(), 3.0);
}

TEST(DominatingTest, StarCenterCoversLeaves) {
  const std::pair<std::uint32_t, std::uint32_t> edges[] = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const DominatingOracle f(5, edges);
  EXPECT_EQ(f.Eval(ElementSet{}), 0.0);
  EXPECT_EQ(f.Eval(ElementSet{E(0)}), static_cast<double>(f.degree(E(0))));
  EXPECT_EQ(f.Eval(ElementSet{E(0)}), 4.0);
  // A leaf covers the center only.
  EXPECT_EQ(f.Eval(ElementSet{E(1)}), 1.0);
}

TEST(DominatingTest, TriangleVertexCoversTwo) {
  const std::pair<std::uint32_t, std::uint32_t> edges[] = {
      {0, 1}, {1, 2}, {2, 0}};
  const DominatingOracle f(3, edges);
  EXPECT_EQ(f.Eval(ElementSet{E(0)}), 2.0);
  EXPECT_EQ(f.Eval(ElementSet{E(0), E(1)}), 3.0);
}

TEST(DominatingTest, DuplicatesMergedAndSelfLoopCovers) {
  const std::pair<std::uint32_t, std::uint32_t> edges[] = {
      {0, 1}, {1, 0}, {0, 1}, {2, 2}};
  const DominatingOracle f(3, edges);
  EXPECT_EQ(f.degree(E(0)), 1u);
  EXPECT_EQ(f.Eval(ElementSet{E(2)}), 1.0);
  const std::pair<std::uint32_t, std::uint32_t> bad[] = {{0, 5}};
  EXPECT_THROW(DominatingOracle(3, bad), std::invalid_argument);
}

TEST(ModularTest, SumsWeights) {
  const ModularOracle f({1.5, 2.0, 4.0});
  EXPECT_EQ(f.Eval(ElementSet{E(0), E(2)}), 5.5);
  EXPECT_THROW(ModularOracle({-1.0}), std::invalid_argument);
}

TEST(KMedoidTest, CollinearExample) {
  // Points 0, 1, 2 with e0 = point 0. L({0}) = (0+1+2)/3, L({0,2}) = 1/3.
  const KMedoidOracle f(Line({0.0, 1.0, 2.0}), E(0));
  EXPECT_EQ(f.Eval(ElementSet{}), 0.0);
  EXPECT_EQ(f.Eval(ElementSet{E(0)}), 0.0);
  EXPECT_NEAR(f.Eval(ElementSet{E(2)}), 3.0 / 3.0 - 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(f.Eval(ElementSet{E(2)}), 2.0 / 3.0, 1e-15);
}

TEST(KMedoidTest, RejectsEmptyAndBadAnchor) {
  EXPECT_THROW(KMedoidOracle(Line({}), E(0)), std::invalid_argument);
  EXPECT_THROW(KMedoidOracle(Line({0.0}), E(1)), std::invalid_argument);
}

TEST(KMedoidTest, HaversineDistancesInMeters) {
  // One degree of latitude on the mean-radius sphere.
  const double expected = kEarthRadiusMeters * M_PI / 180.0;
  EXPECT_NEAR(HaversineMeters(0.0, 0.0, 1.0, 0.0), expected, 1e-6);
  // Rome to Milan, independent spherical law of cosines.
  const double lat1 = 41.9028 * M_PI / 180, lon1 = 12.4964 * M_PI / 180;
  const double lat2 = 45.4642 * M_PI / 180, lon2 = 9.19 * M_PI / 180;
  const double cosines =
      kEarthRadiusMeters *
      std::acos(std::sin(lat1) * std::sin(lat2) +
                std::cos(lat1) * std::cos(lat2) * std::cos(lon2 - lon1));
  EXPECT_NEAR(HaversineMeters(41.9028, 12.4964, 45.4642, 9.19), cosines, 1e-3);
}

TEST(LogDetTest, SmallExamples) {
  LogDetOptions options;
  options.alpha = 10.0;
  options.bandwidth = 1.0;
  const LogDetOracle f(Line({0.0, 0.0, 5.0}), options);
  EXPECT_EQ(f.Eval(ElementSet{}), 0.0);
  EXPECT_NEAR(f.Eval(ElementSet{E(2)}), std::log(11.0), 1e-14);
  // Identical points: det [[11, 10], [10, 11]] = 121 - 100.
  EXPECT_NEAR(f.Eval(ElementSet{E(0), E(1)}), std::log(21.0), 1e-12);
  EXPECT_EQ(f.Kernel(0, 1), 1.0);
  EXPECT_NEAR(f.Kernel(0, 2), std::exp(-25.0), 1e-25);
}

TEST(LogDetTest, DefaultBandwidthIsMedianDistance) {
  // Pairwise distances 1, 3, 4 have median 3.
  const LogDetOracle f(Line({0.0, 1.0, 4.0}), {});
  EXPECT_EQ(f.bandwidth(), 3.0);
  EXPECT_EQ(f.alpha(), 10.0);
}

TEST(LogDetTest, EnforcesSetCap) {
  LogDetOptions options;
  options.max_set_size = 2;
  const LogDetOracle f(Line({0.0, 1.0, 2.0}), options);
  EXPECT_THROW(f.Eval(ElementSet{E(0), E(1), E(2)}), std::invalid_argument);
}

TEST(LogDetTest, DegenerateFactorizationReportsPivot) {
  LogDetOptions options;
  // 1 + 2^60 rounds to 2^60, so the 2x2 matrix is exactly singular.
  options.alpha = std::ldexp(1.0, 60);
  options.bandwidth = 1.0;
  const LogDetOracle f(Line({0.0, 0.0}), options);
  try {
    f.Eval(ElementSet{E(0), E(1)});
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_EQ(e.pivot_index(), 1u);
  }
  auto ev = f.NewEvaluator();
  ev->Add(E(0));
  EXPECT_THROW(ev->Gain(E(1)), NumericError);
}

TEST(LogDetTest, PermutationInvariant) {
  const LogDetOracle f(Line({0.0, 0.7, 1.9, 3.2, 3.3}), {});
  const double a = f.Eval(ElementSet{E(0), E(3), E(4)});
  const double b = f.Eval(ElementSet{E(4), E(0), E(3)});
  EXPECT_NEAR(a, b, 1e-12 * std::abs(a));
}

TEST(LogDetTest, DuplicatePointGainsLessThanDistantPoint) {
  // Points 0, 0, 1, 2, 10. Given {0}, its duplicate adds less than the far
  // point 10; both marginals are taken from brute evaluations.
  const LogDetOracle f(Line({0.0, 0.0, 1.0, 2.0, 10.0}), {});
  const double base = f.Eval(ElementSet{E(0)});
  const double dup = f.Eval(ElementSet{E(0), E(1)}) - base;
  const double far = f.Eval(ElementSet{E(0), E(4)}) - base;
  EXPECT_GT(dup, 0.0);
  EXPECT_LT(dup, far);
}

TEST(RecommendationTest, UnitVectorExample) {
  // One movie equal to the user vector: 0.05 * 1 + 0.95 * 1.
  const RecommendationOracle f({{1.0, 0.0}}, {1.0, 0.0}, 0.95);
  EXPECT_EQ(f.Eval(ElementSet{}), 0.0);
  EXPECT_NEAR(f.Eval(ElementSet{E(0)}), 1.0, 1e-15);
}

TEST(RecommendationTest, ZeroMixIsLinear) {
  const std::vector<std::vector<double>> movies = {
      {1.0, 2.0}, {0.5, 0.0}, {0.0, 3.0}};
  const std::vector<double> user = {0.2, 0.4};
  const RecommendationOracle f(movies, user, 0.0);
  double expected = 0.0;
  for (const auto& m : movies) {
    expected += std::max(0.0, m[0] * user[0] + m[1] * user[1]);
  }
  EXPECT_NEAR(f.Eval(ElementSet{E(0), E(1), E(2)}), expected, 1e-14);
}

TEST(RecommendationTest, ClampsAndValidates) {
  const RecommendationOracle f({{-1.0, 1.0}, {1.0, -2.0}}, {1.0, 1.0});
  EXPECT_EQ(f.clamped_entries(), 2u);
  EXPECT_EQ(f.Dot(0, 1), 0.0);
  EXPECT_THROW(RecommendationOracle({{1.0, 2.0}}, {1.0}),
               std::invalid_argument);
  EXPECT_THROW(RecommendationOracle({{1.0}}, {1.0}, 1.5),
               std::invalid_argument);
}

TEST(MetricTest, MedianPairwiseDistanceSampled) {
  std::vector<double> xs(3000);
  std::iota(xs.begin(), xs.end(), 0.0);
  const PointMetric points(Metric::kEuclidean, 1, xs);
  // Exact median of |i - j| over all pairs is about n (1 - 1/sqrt 2).
  const double exact = MedianPairwiseDistance(points, 10000000);
  const double sampled = MedianPairwiseDistance(points, 100000);
  EXPECT_NEAR(exact, 3000 * (1 - 1 / std::sqrt(2.0)), 5.0);
  EXPECT_NEAR(sampled, exact, 0.02 * exact);
  EXPECT_EQ(MedianPairwiseDistance(points, 100000),
            MedianPairwiseDistance(points, 100000));
}

}  // namespace
}  // namespace consub
