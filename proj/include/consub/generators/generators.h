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

#ifndef CONSUB_GENERATORS_GENERATORS_H_
#define CONSUB_GENERATORS_GENERATORS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "consub/generators/instance.h"

namespace consub {

// Weighted covering instance on which Swapping is a factor ~4 away from the
// optimum. k = 2^i; bundle j in 0..i holds k items e_l^j of weight 2^j
// (2^i - delta for j = i). The stream is, for j < i, the k singletons of
// bundle j followed by the whole bundle E^j, then the k singletons of
// bundle i. Stream length i(k+1) + k.
//
// Element ids follow stream order.
Instance GenSwappingHard(int i, double delta);

// Value Swapping ends with: k 2^(i-1).
double SwappingHardSwappingValue(int i);
// Element ids of the k singletons of bundle j.
std::vector<ElementId> SwappingHardSingletons(int i, int j);
// Bundles E^0..E^(i-1) plus the first k-i singletons of bundle i.
ElementSet SwappingHardReferenceSet(int i);
// Value of SwappingHardReferenceSet: k(2^i - 1) + (k - i)(2^i - delta).
double SwappingHardReferenceValue(int i, double delta);
// 4 - (2 / 2^i)(delta + 1 + i).
double SwappingHardRatioBound(int i, double delta);

// Rows/columns covering instance on which the offline optimum and the greedy
// solution change entirely after every insertion. Items are (a, b) for
// a, b in 0..i; row R_a covers {(a, *)}, column C_b covers {(*, b)}. Stream
// C_1, R_1, ..., C_i, R_i. Requires i >= 2 and 1 <= k <= i.
Instance GenGreedyInstability(int i, double delta, std::size_t k);

// Element id of row R_a / column C_b (a, b in 1..i).
ElementId GreedyInstabilityRow(int a);
ElementId GreedyInstabilityColumn(int b);

enum class SieveMode { kDoubling, kBlockwise };

// Modular instance with f(e_t) = 2^t (doubling) or k^ceil(t/k) (blockwise),
// t = 1..n. Requires n <= 900; throws std::invalid_argument when a weight
// (or the sieve threshold range above it) does not fit a double.
Instance GenSieveInstability(std::size_t n, SieveMode mode, std::size_t k);

SieveMode ParseSieveMode(const std::string& text);
std::string SieveModeName(SieveMode mode);

// Rebuilds an instance from its spec. Known names: "swapping-hard"
// (i, delta), "greedy-instability" (i, delta, k), "sieve-instability"
// (n, mode, k). Throws std::invalid_argument for unknown names or
// missing/ill-typed parameters.
Instance GenerateInstance(const InstanceSpec& spec);

const std::vector<std::string>& GeneratorNames();

}  // namespace consub

#endif  // CONSUB_GENERATORS_GENERATORS_H_
