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

#include "oamic/cli/json_io.hpp"

#include <cmath>

namespace oamic::cli {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const DensityMatrix& rho) {
  Json data = Json::array();
  for (Index i = 0; i < rho.dim(); ++i) {
    for (Index j = 0; j < rho.dim(); ++j) data.push_back(to_json(rho(i, j)));
  }
  return {{"modes", rho.basis().labels()}, {"data", std::move(data)}};
}

Json to_json(const InvariantValue& v) {
  Json j = {{"well_conditioned", v.well_conditioned},
            {"denominator_magnitude", v.denominator_magnitude}};
  j["value"] = v.well_conditioned ? to_json(v.value) : Json(nullptr);
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError("complex numbers must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("expected a list of complex numbers");
  ComplexVector v(Index(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(Index(i)) = complex_from_json(j[i]);
  return v;
}

DensityMatrix density_from_json(const Json& j, const ModeBasis& default_basis) {
  if (!j.is_object()) throw ConfigError("density matrix must be an object");
  ConfigReader r(j, "state");
  ModeBasis basis = default_basis;
  if (r.has("modes")) basis = ModeBasis(r.get<std::vector<int>>("modes"));
  const Json& data = r.require("data");
  r.finish();
  if (!data.is_array()) throw ConfigError("state.data must be a list");
  const Index n = basis.size();
  if (Index(data.size()) != n * n) {
    throw ConfigError("state.data must hold dim*dim entries for the given modes");
  }
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) m(i, k) = complex_from_json(data[std::size_t(i * n + k)]);
  }
  return validate_density(std::move(m), std::move(basis));
}

ConfigReader::ConfigReader(const Json& object, std::string where)
    : object_(object), where_(std::move(where)) {
  if (!object_.is_object()) throw ConfigError(where_ + " must be an object");
}

bool ConfigReader::has(const std::string& key) {
  seen_.insert(key);
  return object_.contains(key);
}

const Json& ConfigReader::require(const std::string& key) {
  seen_.insert(key);
  if (!object_.contains(key)) throw ConfigError(where_ + ": missing key '" + key + "'");
  return object_.at(key);
}

void ConfigReader::finish() const {
  for (const auto& [key, value] : object_.items()) {
    if (!seen_.count(key)) throw ConfigError(where_ + ": unknown key '" + key + "'");
  }
}

}  // namespace oamic::cli
