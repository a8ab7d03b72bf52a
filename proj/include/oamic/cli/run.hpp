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

#ifndef OAMIC_CLI_RUN_HPP
#define OAMIC_CLI_RUN_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oamic/cli/json_io.hpp"

namespace oamic::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitValidation = 3,
  kExitNumerical = 4,
};

enum class Format { Json, Csv };

const std::vector<std::string>& scenario_names();

struct Invocation {
  std::string scenario;
  std::filesystem::path config_path;
  std::optional<std::filesystem::path> out_path;
  std::uint64_t seed = 0;
  Format format = Format::Json;
};

/// What a scenario produced: the JSON `results` block and its CSV rendering.
struct ScenarioOutput {
  Json results;
  std::string csv;
};

/// Runs one scenario on an already-parsed config object. Relative paths in
/// the config resolve against `base_dir`. Throws ConfigError or oamic::Error.
ScenarioOutput run_scenario(const std::string& scenario, const Json& config,
                            std::uint64_t seed, const std::filesystem::path& base_dir = {});

/// Reads the config, runs the scenario and writes the artifact to
/// `out_path` (or `out`). Failures print a JSON error report to `err`, write
/// nothing, and return the matching exit code.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// Command-line entry point: parses argv and forwards to `run`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oamic::cli

#endif  // OAMIC_CLI_RUN_HPP
