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

#ifndef OAMIC_ERROR_HPP
#define OAMIC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace oamic {

enum class ErrorKind {
  InvalidDimension,
  ShapeError,
  NotHermitian,
  TraceNotOne,
  NotPSD,
  ChannelSpecError,
  DegenerateChannel,
  IllConditioned,
  IllPosed,
  SingularSystem,
  NotNormalized,
  UnknownSyndrome,
  InsufficientData,
  InvalidData,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `magnitude` carries the measured
/// violation (e.g. a trace defect or a denominator size) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double magnitude = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        magnitude_(magnitude) {}

  ErrorKind kind() const noexcept { return kind_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorKind kind_;
  double magnitude_;
};

}  // namespace oamic

#endif  // OAMIC_ERROR_HPP
