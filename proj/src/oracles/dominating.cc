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

#include "consub/oracles/dominating.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oracles/coverage_counter.h"

namespace consub {

DominatingOracle::DominatingOracle(
    std::size_t vertex_count,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("dominating: unknown vertex in edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    }
    adj[u].push_back(v);
    if (u != v) adj[v].push_back(u);
  }
  offsets_.reserve(vertex_count + 1);
  offsets_.push_back(0);
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    neighbors_.insert(neighbors_.end(), list.begin(), list.end());
    offsets_.push_back(neighbors_.size());
  }
}

double DominatingOracle::Evaluate(std::span<const ElementId> set) const {
  std::vector<char> covered(ground_size(), 0);
  std::size_t count = 0;
  for (ElementId s : set) {
    for (std::uint32_t v : neighbors(s)) {
      if (!covered[v]) {
        covered[v] = 1;
        ++count;
      }
    }
  }
  return static_cast<double>(count);
}

std::unique_ptr<SetEvaluator> DominatingOracle::NewEvaluator() const {
  return std::make_unique<internal::CoverageCounter>(
      *this, ground_size(), nullptr,
      [this](ElementId v) { return neighbors(v); });
}

}  // namespace consub
