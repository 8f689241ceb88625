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

#include "consub/algorithms/sieve_streaming.h"

#include <cmath>
#include <stdexcept>

namespace consub {

SieveStreaming::SieveStreaming(const ValueOracle& oracle, std::size_t k,
                               SieveStreamingOptions options)
    : StreamingAlgorithm(oracle, k), epsilon_(options.epsilon) {
  if (k == 0) throw std::invalid_argument("sieve-streaming: k must be >= 1");
  if (!(epsilon_ > 0.0)) {
    throw std::invalid_argument("sieve-streaming: epsilon must be > 0");
  }
}

std::map<std::string, double> SieveStreaming::params() const {
  return {{"epsilon", epsilon_}};
}

double SieveStreaming::Threshold(int exponent) const {
  return std::pow(1.0 + epsilon_, exponent);
}

std::vector<double> SieveStreaming::thresholds() const {
  std::vector<double> out;
  for (const auto& [j, candidate] : candidates_) out.push_back(Threshold(j));
  return out;
}

void SieveStreaming::RefreshWindow() {
  if (!(max_singleton_ > 0.0)) return;
  const double lo = max_singleton_;
  const double hi = 2.0 * static_cast<double>(k()) * max_singleton_;
  const double log_base = std::log1p(epsilon_);
  // Seed from logarithms, then fix rounding against pow() directly so that
  // membership is decided by the same values Threshold() reports.
  int j_lo = static_cast<int>(std::ceil(std::log(lo) / log_base));
  while (Threshold(j_lo) < lo) ++j_lo;
  while (Threshold(j_lo - 1) >= lo) --j_lo;
  int j_hi = static_cast<int>(std::floor(std::log(hi) / log_base));
  while (Threshold(j_hi) > hi) --j_hi;
  while (Threshold(j_hi + 1) <= hi) ++j_hi;

  for (auto it = candidates_.begin(); it != candidates_.end();) {
    if (it->first < j_lo || it->first > j_hi) {
      retired_calls_ += it->second->oracle_calls();
      it = candidates_.erase(it);
    } else {
      ++it;
    }
  }
  for (int j = j_lo; j <= j_hi; ++j) {
    if (!candidates_.contains(j))
      candidates_.emplace(j, oracle().NewEvaluator());
  }
}

void SieveStreaming::Process(ElementId e) {
  const ElementId single[] = {e};
  const double singleton = oracle().Eval(single);
  ++singleton_calls_;
  if (singleton > max_singleton_) max_singleton_ = singleton;
  RefreshWindow();

  const double kd = static_cast<double>(k());
  for (auto& [j, candidate] : candidates_) {
    if (candidate->size() >= k()) continue;
    const double v = Threshold(j);
    const double needed = (v / 2.0 - candidate->value()) /
                          (kd - static_cast<double>(candidate->size()));
    if (candidate->Gain(e) >= needed) candidate->Add(e);
  }

  const SetEvaluator* best = nullptr;
  for (const auto& [j, candidate] : candidates_) {
    if (best == nullptr || candidate->value() > best->value()) {
      best = candidate.get();
    }
  }
  if (best == nullptr) {
    reported_.Clear();
    reported_value_ = 0.0;
  } else {
    reported_ = best->members();
    reported_value_ = best->value();
  }
}

std::uint64_t SieveStreaming::OracleCalls() const {
  std::uint64_t total = singleton_calls_ + retired_calls_;
  for (const auto& [j, candidate] : candidates_)
    total += candidate->oracle_calls();
  return total;
}

}  // namespace consub
