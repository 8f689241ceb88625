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

#ifndef CONSUB_INGEST_LOADERS_H_
#define CONSUB_INGEST_LOADERS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace consub {

// Undirected simple graph over dense vertex ids [0, vertex_count).
struct EdgeListGraph {
  std::size_t vertex_count = 0;
  // Each edge once, as (min, max), sorted. Self-loops are kept.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Whitespace-separated "u v" pairs, one per line; blank lines and lines
// starting with '#' are skipped. Duplicate and reversed edges are merged.
// vertex_count is 1 + the largest id seen. Throws ParseError on malformed
// lines and std::runtime_error when the file cannot be read.
EdgeListGraph LoadEdgeList(const std::filesystem::path& path);
EdgeListGraph ParseEdgeList(const std::string& text);

struct GeoPoint {
  double latitude = 0.0;   // degrees, [-90, 90]
  double longitude = 0.0;  // degrees, [-180, 180]

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

using GeoPointSet = std::vector<GeoPoint>;

// RFC 4180 CSV with a header row. Coordinates are read from the columns named
// `lat_col` and `lon_col`, in file order, stopping after `limit` points
// (0 = no limit).
GeoPointSet LoadPointsCsv(const std::filesystem::path& path,
                          const std::string& lat_col,
                          const std::string& lon_col, std::size_t limit = 0);
GeoPointSet ParsePointsCsv(const std::string& text, const std::string& lat_col,
                           const std::string& lon_col, std::size_t limit = 0);

// Row-major coordinates (lat, lon, lat, lon, ...) for PointMetric.
std::vector<double> FlattenPoints(const GeoPointSet& points);

struct FeatureMatrix {
  std::vector<std::vector<double>> rows;
  std::size_t dimension = 0;
  // Negative entries replaced by 0.
  std::size_t clamped_entries = 0;
};

// Headerless CSV of reals, one row per item. The dimension is taken from the
// first row; ragged rows and non-finite entries are ParseErrors, as is a file
// without rows.
FeatureMatrix LoadFeatureMatrix(const std::filesystem::path& path);
FeatureMatrix ParseFeatureMatrix(const std::string& text);

// Uniform sample of n points without replacement, in their original relative
// order. Deterministic for a given seed. Throws std::invalid_argument when
// n > points.size().
GeoPointSet Subsample(const GeoPointSet& points, std::size_t n,
                      std::uint64_t seed);

// Splits RFC 4180 text into records. Quoted fields may contain separators,
// doubled quotes and line breaks. Each record carries the 1-based line it
// starts on.
struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};
std::vector<CsvRecord> ParseCsv(const std::string& text);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace consub

#endif  // CONSUB_INGEST_LOADERS_H_
