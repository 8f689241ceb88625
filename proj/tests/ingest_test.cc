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

#include <filesystem>
#include <functional>
#include <string>

#include "consub/errors.h"
#include "consub/ingest/loaders.h"
#include "gtest/gtest.h"

namespace consub {
namespace {

const std::filesystem::path kData = CONSUB_TEST_DATA;

std::size_t ErrorLine(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected ParseError";
  return 0;
}

TEST(EdgeListTest, ParsesAndMergesDuplicates) {
  const EdgeListGraph g = ParseEdgeList("0 1\n1 2");
  EXPECT_EQ(g.vertex_count, 3u);
  EXPECT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(ParseEdgeList("0 1\n1 0").edges.size(), 1u);
}

TEST(EdgeListTest, Fixture) {
  const EdgeListGraph g = LoadEdgeList(kData / "edges.txt");
  EXPECT_EQ(g.vertex_count, 4u);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> expected = {
      {0, 1}, {1, 2}, {2, 3}, {3, 3}};
  EXPECT_EQ(g.edges, expected);
  // Reloading is pure.
  EXPECT_EQ(LoadEdgeList(kData / "edges.txt").edges, g.edges);
}

TEST(EdgeListTest, MalformedLineReportsLineNumber) {
  EXPECT_EQ(ErrorLine([] { ParseEdgeList("# c\n0 1\n1 x\n"); }), 3u);
  EXPECT_EQ(ErrorLine([] { ParseEdgeList("0 1 2\n"); }), 1u);
  EXPECT_EQ(ErrorLine([] { ParseEdgeList("0 1\n\n-1 2\n"); }), 3u);
  EXPECT_THROW(LoadEdgeList(kData / "missing.txt"), std::runtime_error);
}

TEST(PointsCsvTest, FixtureInOrder) {
  const GeoPointSet p = LoadPointsCsv(kData / "points.csv", "Lat", "Lon");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], (GeoPoint{48.8566, 2.3522}));
  EXPECT_EQ(p[1], (GeoPoint{51.5074, -0.1278}));
  EXPECT_EQ(p[2], (GeoPoint{40.7128, -74.0060}));
  EXPECT_EQ(FlattenPoints(p),
            (std::vector<double>{48.8566, 2.3522, 51.5074, -0.1278, 40.7128,
                                 -74.0060}));
}

TEST(PointsCsvTest, LimitTruncates) {
  const GeoPointSet p = LoadPointsCsv(kData / "points.csv", "Lat", "Lon", 2);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1], (GeoPoint{51.5074, -0.1278}));
}

TEST(PointsCsvTest, Errors) {
  EXPECT_EQ(
      ErrorLine([] { ParsePointsCsv("Lat,Lon\n1,2\n95,0\n", "Lat", "Lon"); }),
      3u);
  EXPECT_EQ(ErrorLine([] { ParsePointsCsv("Lat,Lon\n1,200\n", "Lat", "Lon"); }),
            2u);
  EXPECT_EQ(ErrorLine([] { ParsePointsCsv("Lat,Lon\nabc,2\n", "Lat", "Lon"); }),
            2u);
  EXPECT_THROW(ParsePointsCsv("A,B\n1,2\n", "Lat", "Lon"), ParseError);
  EXPECT_THROW(ParsePointsCsv("", "Lat", "Lon"), ParseError);
}

TEST(CsvTest, QuotedFields) {
  const std::vector<CsvRecord> r =
      ParseCsv("a,\"b,c\",\"d \"\"e\"\"\"\n\n1,2,3\r\n");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].fields, (std::vector<std::string>{"a", "b,c", "d \"e\""}));
  EXPECT_EQ(r[1].line, 3u);
}

TEST(FeatureMatrixTest, FixtureClampsNegatives) {
  const FeatureMatrix m = LoadFeatureMatrix(kData / "features.csv");
  EXPECT_EQ(m.dimension, 30u);
  ASSERT_EQ(m.rows.size(), 2u);
  EXPECT_EQ(m.rows[1][4], 0.0);
  EXPECT_EQ(m.clamped_entries, 1u);
  for (const auto& row : m.rows) {
    for (double x : row) EXPECT_GE(x, 0.0);
  }
}

TEST(FeatureMatrixTest, Errors) {
  EXPECT_THROW(ParseFeatureMatrix(""), ParseError);
  EXPECT_EQ(ErrorLine([] { ParseFeatureMatrix("1,2\n3\n"); }), 2u);
  EXPECT_EQ(ErrorLine([] { ParseFeatureMatrix("1,2\n3,nan\n"); }), 2u);
  EXPECT_EQ(ErrorLine([] { ParseFeatureMatrix("1,q\n"); }), 1u);
}

TEST(SubsampleTest, Basics) {
  GeoPointSet points;
  for (int i = 0; i < 50; ++i) points.push_back({i * 0.5, -i * 1.0});
  EXPECT_EQ(Subsample(points, points.size(), 9), points);
  EXPECT_TRUE(Subsample(points, 0, 9).empty());
  const GeoPointSet a = Subsample(points, 10, 42);
  EXPECT_EQ(a, Subsample(points, 10, 42));
  ASSERT_EQ(a.size(), 10u);
  // Relative order is preserved.
  for (std::size_t i = 1; i < a.size(); ++i) {
    EXPECT_LT(a[i - 1].latitude, a[i].latitude);
  }
  EXPECT_THROW(Subsample(points, 51, 1), std::invalid_argument);
}

}  // namespace
}  // namespace consub
