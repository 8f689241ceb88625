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

#ifndef CONSUB_ORACLES_DOMINATING_H_
#define CONSUB_ORACLES_DOMINATING_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "consub/oracle.h"

namespace consub {

// Dominating function on an undirected graph whose vertices are the
// elements: f(S) = |{v : some s in S has an edge (s, v)}|.
// A vertex covers itself only through a self-loop.
class DominatingOracle : public ValueOracle {
 public:
  // Edges are undirected; duplicates are merged.
  DominatingOracle(
      std::size_t vertex_count,
      std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  std::string_view name() const override { return "dominating"; }
  std::size_t ground_size() const override { return offsets_.size() - 1; }
  std::span<const std::uint32_t> neighbors(ElementId v) const {
    return {neighbors_.data() + offsets_[Index(v)],
            neighbors_.data() + offsets_[Index(v) + 1]};
  }
  std::size_t degree(ElementId v) const { return neighbors(v).size(); }

  std::unique_ptr<SetEvaluator> NewEvaluator() const override;

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<std::size_t> offsets_;  // CSR, size vertex_count + 1
  std::vector<std::uint32_t> neighbors_;
};

}  // namespace consub

#endif  // CONSUB_ORACLES_DOMINATING_H_
