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

#ifndef CONSUB_GENERATORS_INSTANCE_H_
#define CONSUB_GENERATORS_INSTANCE_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "consub/element_set.h"
#include "consub/oracle.h"
#include "json.hpp"

namespace consub {

// Declarative description of an instance: generator (or dataset) name plus
// its parameters. Regenerating from the same spec yields the same instance.
struct InstanceSpec {
  std::string name;
  nlohmann::json params = nlohmann::json::object();

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// A stream together with the oracle it is scored against.
struct Instance {
  InstanceSpec spec;
  std::shared_ptr<const ValueOracle> oracle;
  std::vector<ElementId> stream;
  // Cardinality the instance was built for, when it fixes one.
  std::optional<std::size_t> k;
  // Optional human-readable descriptor per ground element.
  std::vector<std::string> labels;
};

// {"name": ..., "params": {...}} with keys sorted.
nlohmann::json SpecToJson(const InstanceSpec& spec);
InstanceSpec SpecFromJson(const nlohmann::json& json);

// Spec plus oracle summary, k and the explicit stream of element descriptors.
nlohmann::json InstanceToJson(const Instance& instance);

// 16 hex digits of FNV-1a (64 bit) over SpecToJson(spec).dump().
std::string InstanceHash(const InstanceSpec& spec);

}  // namespace consub

#endif  // CONSUB_GENERATORS_INSTANCE_H_
