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

#include "oamic/cli/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace oamic::cli {

std::vector<IntensityFit> analyze_intensities(const std::vector<IntensityRecord>& records) {
  std::map<int, std::vector<IntensityRecord>> groups;
  std::set<std::pair<int, int>> seen;
  for (const auto& r : records) {
    if (!(r.relative_intensity >= 0.0 && r.relative_intensity <= 1.0)) {
      throw Error(ErrorKind::InvalidData, "relative intensity must lie in [0, 1]",
                  r.relative_intensity);
    }
    if (!seen.emplace(r.initial_mode, r.delta_ell).second) {
      throw Error(ErrorKind::InvalidData,
                  "duplicate record for initial mode " + std::to_string(r.initial_mode) +
                      ", delta_ell " + std::to_string(r.delta_ell));
    }
    groups[r.delta_ell].push_back(r);
  }

  std::vector<IntensityFit> fits;
  for (const auto& [delta, group] : groups) {
    IntensityFit fit;
    fit.delta_ell = delta;
    fit.count = group.size();
    if (group.size() < 2) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      fit.slope = fit.intercept = fit.relative_change = nan;
      fit.error = ErrorKind::InsufficientData;
      fits.push_back(fit);
      continue;
    }

    const double n = double(group.size());
    double mean_x = 0.0, mean_y = 0.0;
    double lo = group.front().relative_intensity, hi = lo;
    for (const auto& r : group) {
      mean_x += r.initial_mode;
      mean_y += r.relative_intensity;
      lo = std::min(lo, r.relative_intensity);
      hi = std::max(hi, r.relative_intensity);
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& r : group) {
      const double dx = r.initial_mode - mean_x;
      sxx += dx * dx;
      sxy += dx * (r.relative_intensity - mean_y);
    }
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.relative_change = mean_y > 0.0 ? (hi - lo) / mean_y : 0.0;
    fits.push_back(fit);
  }
  return fits;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<IntensityRecord> parse_intensity_csv(std::istream& in) {
  std::vector<IntensityRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.rfind("initial_mode", 0) == 0) {
      if (t != "initial_mode,delta_ell,relative_intensity") {
        throw Error(ErrorKind::InvalidData, "unexpected CSV header: " + t);
      }
      continue;
    }

    std::vector<std::string> cells;
    std::stringstream row(t);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(trim(cell));
    if (cells.size() != 3) {
      throw Error(ErrorKind::InvalidData, "line " + std::to_string(line_no) + ": expected 3 columns");
    }
    try {
      std::size_t used = 0;
      IntensityRecord r;
      r.initial_mode = std::stoi(cells[0], &used);
      if (used != cells[0].size()) throw std::invalid_argument("initial_mode");
      r.delta_ell = std::stoi(cells[1], &used);
      if (used != cells[1].size()) throw std::invalid_argument("delta_ell");
      r.relative_intensity = std::stod(cells[2], &used);
      if (used != cells[2].size()) throw std::invalid_argument("relative_intensity");
      records.push_back(r);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidData, "line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return records;
}

}  // namespace oamic::cli
