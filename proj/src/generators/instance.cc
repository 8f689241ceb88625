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

#include "consub/generators/instance.h"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace consub {

nlohmann::json SpecToJson(const InstanceSpec& spec) {
  return {{"name", spec.name}, {"params", spec.params}};
}

InstanceSpec SpecFromJson(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("name") ||
      !json.at("name").is_string()) {
    throw std::invalid_argument("instance spec: missing string field 'name'");
  }
  InstanceSpec spec;
  spec.name = json.at("name").get<std::string>();
  if (json.contains("params")) {
    if (!json.at("params").is_object()) {
      throw std::invalid_argument("instance spec: 'params' must be an object");
    }
    spec.params = json.at("params");
  }
  return spec;
}

nlohmann::json InstanceToJson(const Instance& instance) {
  nlohmann::json out = SpecToJson(instance.spec);
  out["hash"] = InstanceHash(instance.spec);
  out["oracle"] = {{"type", std::string(instance.oracle->name())},
                   {"ground_size", instance.oracle->ground_size()}};
  out["k"] = instance.k ? nlohmann::json(*instance.k) : nlohmann::json(nullptr);
  nlohmann::json stream = nlohmann::json::array();
  for (ElementId e : instance.stream) {
    nlohmann::json item = {{"id", Index(e)}};
    if (Index(e) < instance.labels.size()) {
      item["label"] = instance.labels[Index(e)];
    }
    stream.push_back(std::move(item));
  }
  out["stream"] = std::move(stream);
  return out;
}

std::string InstanceHash(const InstanceSpec& spec) {
  const std::string text = SpecToJson(spec).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace consub
