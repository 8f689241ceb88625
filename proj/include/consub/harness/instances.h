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

#ifndef CONSUB_HARNESS_INSTANCES_H_
#define CONSUB_HARNESS_INSTANCES_H_

#include <filesystem>
#include <string>
#include <vector>

#include "consub/generators/instance.h"

namespace consub {

// Environment variable naming the dataset directory ("data" when unset).
inline constexpr char kDataDirEnv[] = "CONSUB_DATA_DIR";

std::filesystem::path DefaultDataDir();

// "a=1,b=0.5,c=text" -> {"a": 1, "b": 0.5, "c": "text"}. Values parse as
// integers, then reals, then strings. Throws std::invalid_argument on a
// missing '=' or an empty key.
nlohmann::json ParseParamList(const std::string& text);

// Instance argument forms:
//   path/to/spec.json          {"name": ..., "params": {...}}
//   name                       generator or dataset with default params
//   name:key=value,...         explicit params
InstanceSpec ParseInstanceArg(const std::string& text);

// Dataset-backed instances (stream = file order):
//   edge-list        path                        dominating function
//   facebook         (path = facebook_combined.txt)
//   geo-kmedoid      path, lat, lon, [limit, sample, seed, metric]
//   geo-logdet       same, plus [alpha, bandwidth]
//   recommendation   path, [mix, seed]           user vector uniform in
//                                                [0,1]^d drawn from seed
// Relative paths are looked up in `data_dir`.
const std::vector<std::string>& DatasetNames();

// Builds a generated or dataset instance. Missing files raise
// std::invalid_argument naming the path.
Instance ResolveInstance(const InstanceSpec& spec,
                         const std::filesystem::path& data_dir);

}  // namespace consub

#endif  // CONSUB_HARNESS_INSTANCES_H_
