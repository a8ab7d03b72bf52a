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

#ifndef OAMIC_CLI_ANALYSIS_HPP
#define OAMIC_CLI_ANALYSIS_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "oamic/error.hpp"

namespace oamic::cli {

/// Relative intensity measured in mode l_in + delta_ell when l_in was sent.
struct IntensityRecord {
  int initial_mode = 0;
  int delta_ell = 0;
  double relative_intensity = 0.0;
};

/// Ordinary least-squares line of relative intensity against initial mode
/// for one delta_ell group. `error` is set (and the numbers are NaN) when the
/// group has fewer than two distinct initial modes.
struct IntensityFit {
  int delta_ell = 0;
  std::size_t count = 0;
  double slope = 0.0;
  double intercept = 0.0;
  /// (max - min) / mean over the group.
  double relative_change = 0.0;
  std::optional<ErrorKind> error;
};

/// Throws InvalidData on intensities outside [0, 1] or duplicate
/// (initial_mode, delta_ell) keys. Groups come back sorted by delta_ell.
std::vector<IntensityFit> analyze_intensities(const std::vector<IntensityRecord>& records);

/// Reads `initial_mode,delta_ell,relative_intensity` rows; a header line with
/// those names and lines starting with '#' are skipped.
std::vector<IntensityRecord> parse_intensity_csv(std::istream& in);

}  // namespace oamic::cli

#endif  // OAMIC_CLI_ANALYSIS_HPP
