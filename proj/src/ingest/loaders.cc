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

#include "consub/ingest/loaders.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <system_error>

#include "consub/errors.h"

namespace consub {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ParseDouble(std::string_view s, double* out) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(*out);
}

bool ParseVertex(std::string_view s, std::uint32_t* out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::size_t Column(const CsvRecord& header, const std::string& name) {
  for (std::size_t c = 0; c < header.fields.size(); ++c) {
    if (Trim(header.fields[c]) == name) return c;
  }
  throw ParseError("points csv: no column named '" + name + "'", header.line);
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CsvRecord> ParseCsv(const std::string& text) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  std::size_t line = 1;
  bool in_quotes = false;
  bool record_open = false;
  auto end_record = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(current));
    current = CsvRecord{};
    record_open = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!record_open) {
      current.line = line;
      record_open = true;
    }
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes)
    throw ParseError("csv: unterminated quoted field", current.line);
  if (record_open) end_record();
  // Blank lines are not records.
  std::erase_if(records, [](const CsvRecord& r) {
    return r.fields.size() == 1 && Trim(r.fields[0]).empty();
  });
  return records;
}

EdgeListGraph ParseEdgeList(const std::string& text) {
  EdgeListGraph graph;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::uint32_t max_id = 0;
  bool any = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = Trim(raw);
    if (s.empty() || s.front() == '#') continue;
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < s.size()) {
      const auto start = s.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto stop = std::min(s.find_first_of(" \t", start), s.size());
      tokens.push_back(s.substr(start, stop - start));
      pos = stop;
    }
    std::uint32_t u = 0, v = 0;
    if (tokens.size() != 2 || !ParseVertex(tokens[0], &u) ||
        !ParseVertex(tokens[1], &v)) {
      throw ParseError(
          "edge list: expected two non-negative integer ids, got '" +
              std::string(s) + "'",
          line);
    }
    graph.edges.emplace_back(std::min(u, v), std::max(u, v));
    max_id = std::max({max_id, u, v});
    any = true;
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()),
                    graph.edges.end());
  graph.vertex_count = any ? std::size_t{max_id} + 1 : 0;
  return graph;
}

EdgeListGraph LoadEdgeList(const std::filesystem::path& path) {
  return ParseEdgeList(ReadFile(path));
}

GeoPointSet ParsePointsCsv(const std::string& text, const std::string& lat_col,
                           const std::string& lon_col, std::size_t limit) {
  const std::vector<CsvRecord> records = ParseCsv(text);
  if (records.empty()) throw ParseError("points csv: missing header row", 1);
  const std::size_t lat_idx = Column(records[0], lat_col);
  const std::size_t lon_idx = Column(records[0], lon_col);
  GeoPointSet points;
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (limit != 0 && points.size() == limit) break;
    const CsvRecord& rec = records[r];
    if (rec.fields.size() <= std::max(lat_idx, lon_idx)) {
      throw ParseError("points csv: row has too few fields", rec.line);
    }
    GeoPoint p;
    if (!ParseDouble(rec.fields[lat_idx], &p.latitude) ||
        !ParseDouble(rec.fields[lon_idx], &p.longitude)) {
      throw ParseError("points csv: non-numeric coordinate", rec.line);
    }
    if (p.latitude < -90.0 || p.latitude > 90.0) {
      throw ParseError("points csv: latitude out of [-90, 90]", rec.line);
    }
    if (p.longitude < -180.0 || p.longitude > 180.0) {
      throw ParseError("points csv: longitude out of [-180, 180]", rec.line);
    }
    points.push_back(p);
  }
  return points;
}

GeoPointSet LoadPointsCsv(const std::filesystem::path& path,
                          const std::string& lat_col,
                          const std::string& lon_col, std::size_t limit) {
  return ParsePointsCsv(ReadFile(path), lat_col, lon_col, limit);
}

std::vector<double> FlattenPoints(const GeoPointSet& points) {
  std::vector<double> out;
  out.reserve(2 * points.size());
  for (const GeoPoint& p : points) {
    out.push_back(p.latitude);
    out.push_back(p.longitude);
  }
  return out;
}

FeatureMatrix ParseFeatureMatrix(const std::string& text) {
  const std::vector<CsvRecord> records = ParseCsv(text);
  if (records.empty()) throw ParseError("feature matrix: no rows", 1);
  FeatureMatrix m;
  m.dimension = records[0].fields.size();
  for (const CsvRecord& rec : records) {
    if (rec.fields.size() != m.dimension) {
      throw ParseError("feature matrix: expected " +
                           std::to_string(m.dimension) + " fields, got " +
                           std::to_string(rec.fields.size()),
                       rec.line);
    }
    std::vector<double> row(m.dimension);
    for (std::size_t c = 0; c < m.dimension; ++c) {
      if (!ParseDouble(rec.fields[c], &row[c])) {
        throw ParseError("feature matrix: bad number '" + rec.fields[c] + "'",
                         rec.line);
      }
      if (row[c] < 0.0) {
        row[c] = 0.0;
        ++m.clamped_entries;
      }
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

FeatureMatrix LoadFeatureMatrix(const std::filesystem::path& path) {
  return ParseFeatureMatrix(ReadFile(path));
}

GeoPointSet Subsample(const GeoPointSet& points, std::size_t n,
                      std::uint64_t seed) {
  if (n > points.size()) {
    throw std::invalid_argument("subsample: n = " + std::to_string(n) +
                                " exceeds " + std::to_string(points.size()) +
                                " points");
  }
  GeoPointSet out;
  out.reserve(n);
  std::mt19937_64 rng(seed);
  std::sample(points.begin(), points.end(), std::back_inserter(out), n, rng);
  return out;
}

}  // namespace consub
