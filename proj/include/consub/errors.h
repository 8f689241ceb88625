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

#ifndef CONSUB_ERRORS_H_
#define CONSUB_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

// Invalid arguments are reported with std::invalid_argument throughout the
// library. The types below cover the remaining failure classes.

namespace consub {

// A request would exceed a configured enumeration or size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix factorization broke down at `pivot_index`.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::size_t pivot_index)
      : std::runtime_error(what), pivot_index_(pivot_index) {}
  std::size_t pivot_index() const { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

// Malformed input file. `line` is the 1-based physical line in the file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An algorithm under test broke its own contract (e.g. reported an
// infeasible solution).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace consub

#endif  // CONSUB_ERRORS_H_
