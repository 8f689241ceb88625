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

#ifndef CONSUB_ORACLES_METRIC_H_
#define CONSUB_ORACLES_METRIC_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace consub {

// Mean Earth radius used for geodesic distances, in meters.
inline constexpr double kEarthRadiusMeters = 6371008.8;

enum class Metric {
  kEuclidean,  // unitless, any dimension
  kHaversine,  // (latitude, longitude) in degrees; distances in meters
};

// Immutable point cloud with a distance function.
class PointMetric {
 public:
  // `coords` is row-major with `dim` values per point. kHaversine requires
  // dim == 2.
  PointMetric(Metric metric, std::size_t dim, std::vector<double> coords);

  std::size_t size() const { return count_; }
  std::size_t dim() const { return dim_; }
  Metric metric() const { return metric_; }
  const double* point(std::size_t i) const { return coords_.data() + i * dim_; }

  double Distance(std::size_t i, std::size_t j) const;

 private:
  Metric metric_;
  std::size_t dim_;
  std::size_t count_;
  std::vector<double> coords_;
  // Haversine only: latitude/longitude in radians and cos(latitude).
  std::vector<double> lat_rad_, lon_rad_, cos_lat_;
};

double HaversineMeters(double lat1_deg, double lon1_deg, double lat2_deg,
                       double lon2_deg);

// Median of pairwise distances. Uses every unordered pair when there are at
// most `max_pairs` of them, otherwise `max_pairs` pairs drawn with a fixed
// seed. Returns 0 for fewer than two points.
double MedianPairwiseDistance(const PointMetric& points,
                              std::size_t max_pairs = 1000000,
                              std::uint64_t seed = 0x5eed);

}  // namespace consub

#endif  // CONSUB_ORACLES_METRIC_H_
