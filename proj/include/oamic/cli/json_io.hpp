// Copyright 2026 The oamic Authors
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

#ifndef OAMIC_CLI_JSON_IO_HPP
#define OAMIC_CLI_JSON_IO_HPP

#include <json.hpp>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oamic/invariants.hpp"
#include "oamic/linalg.hpp"

namespace oamic::cli {

using Json = nlohmann::json;

/// Malformed or unknown configuration content (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complex numbers are [re, im]; density matrices are
// {"modes": [...], "data": [[re, im], ...]} with data in row-major order.
Json to_json(Complex z);
Json to_json(const DensityMatrix& rho);
Json to_json(const InvariantValue& v);
Complex complex_from_json(const Json& j);
ComplexVector vector_from_json(const Json& j);
/// Parses and validates a density matrix; a missing "modes" key takes
/// `default_basis`.
DensityMatrix density_from_json(const Json& j, const ModeBasis& default_basis);

/// Reads keys from one JSON object and rejects any it was not asked about.
class ConfigReader {
 public:
  ConfigReader(const Json& object, std::string where);

  bool has(const std::string& key);
  const Json& require(const std::string& key);

  template <typename T>
  T get(const std::string& key) {
    const Json& j = require(key);
    try {
      return j.get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(where_ + "." + key + ": wrong type");
    }
  }

  template <typename T>
  T get_or(const std::string& key, T fallback) {
    return has(key) ? get<T>(key) : fallback;
  }

  /// Throws ConfigError if the object holds keys never read.
  void finish() const;

 private:
  const Json& object_;
  std::string where_;
  std::set<std::string> seen_;
};

}  // namespace oamic::cli

#endif  // OAMIC_CLI_JSON_IO_HPP
