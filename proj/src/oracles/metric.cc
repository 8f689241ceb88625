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

#include "consub/oracles/metric.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace consub {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

double HaversineRad(double lat1, double lon1, double cos_lat1, double lat2,
                    double lon2, double cos_lat2) {
  const double s_lat = std::sin((lat2 - lat1) / 2.0);
  const double s_lon = std::sin((lon2 - lon1) / 2.0);
  const double a = s_lat * s_lat + cos_lat1 * cos_lat2 * s_lon * s_lon;
  return 2.0 * kEarthRadiusMeters * std::asin(std::min(1.0, std::sqrt(a)));
}

}  // namespace

double HaversineMeters(double lat1_deg, double lon1_deg, double lat2_deg,
                       double lon2_deg) {
  const double lat1 = lat1_deg * kDegToRad;
  const double lat2 = lat2_deg * kDegToRad;
  return HaversineRad(lat1, lon1_deg * kDegToRad, std::cos(lat1), lat2,
                      lon2_deg * kDegToRad, std::cos(lat2));
}

PointMetric::PointMetric(Metric metric, std::size_t dim,
                         std::vector<double> coords)
    : metric_(metric), dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0 || coords_.size() % dim_ != 0) {
    throw std::invalid_argument(
        "PointMetric: coordinate count not a multiple of dim");
  }
  count_ = coords_.size() / dim_;
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("PointMetric: non-finite coordinate");
    }
  }
  if (metric_ == Metric::kHaversine) {
    if (dim_ != 2) {
      throw std::invalid_argument(
          "PointMetric: haversine needs (lat, lon) points");
    }
    lat_rad_.resize(count_);
    lon_rad_.resize(count_);
    cos_lat_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) {
      lat_rad_[i] = coords_[2 * i] * kDegToRad;
      lon_rad_[i] = coords_[2 * i + 1] * kDegToRad;
      cos_lat_[i] = std::cos(lat_rad_[i]);
    }
  }
}

double PointMetric::Distance(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  if (metric_ == Metric::kHaversine) {
    return HaversineRad(lat_rad_[i], lon_rad_[i], cos_lat_[i], lat_rad_[j],
                        lon_rad_[j], cos_lat_[j]);
  }
  const double* a = point(i);
  const double* b = point(j);
  double sq = 0.0;
  for (std::size_t d = 0; d < dim_; ++d) {
    const double diff = a[d] - b[d];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

double MedianPairwiseDistance(const PointMetric& points, std::size_t max_pairs,
                              std::uint64_t seed) {
  const std::size_t n = points.size();
  if (n < 2) return 0.0;
  std::vector<double> dists;
  const double all_pairs =
      0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  if (all_pairs <= static_cast<double>(max_pairs)) {
    dists.reserve(static_cast<std::size_t>(all_pairs));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        dists.push_back(points.Distance(i, j));
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    dists.reserve(max_pairs);
    while (dists.size() < max_pairs) {
      const std::size_t i = pick(rng);
      const std::size_t j = pick(rng);
      if (i != j) dists.push_back(points.Distance(i, j));
    }
  }
  auto mid = dists.begin() + dists.size() / 2;
  std::nth_element(dists.begin(), mid, dists.end());
  return *mid;
}

}  // namespace consub
