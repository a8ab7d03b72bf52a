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

#include "oamic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oamic {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::ChannelSpecError: return "ChannelSpecError";
    case ErrorKind::DegenerateChannel: return "DegenerateChannel";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::IllPosed: return "IllPosed";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::UnknownSyndrome: return "UnknownSyndrome";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::InvalidData: return "InvalidData";
  }
  return "Unknown";
}

ModeBasis::ModeBasis(std::vector<int> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (labels_[i] <= labels_[i - 1]) {
      throw Error(ErrorKind::ShapeError, "mode labels must be strictly increasing");
    }
  }
}

ModeBasis ModeBasis::range(int first, int last) {
  if (last < first) throw Error(ErrorKind::ShapeError, "empty mode range");
  std::vector<int> labels(static_cast<std::size_t>(last - first + 1));
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = first + int(i);
  return ModeBasis(std::move(labels));
}

ModeBasis ModeBasis::indices(Index n) { return range(0, int(n) - 1); }

std::optional<Index> ModeBasis::position(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return Index(it - labels_.begin());
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << to_string(violations[i].kind) << " (" << violations[i].magnitude << ")";
  }
  return os.str();
}

}  // namespace

DensityError::DensityError(std::vector<Violation> violations)
    : Error(violations.front().kind, "invalid density matrix: " + describe(violations),
            violations.front().magnitude),
      violations_(std::move(violations)) {}

DensityMatrix validate_density(ComplexMatrix mat, ModeBasis basis) {
  if (mat.rows() != mat.cols()) {
    throw Error(ErrorKind::ShapeError, "density matrix must be square");
  }
  if (mat.rows() != basis.size()) {
    throw Error(ErrorKind::ShapeError, "basis size does not match matrix dimension");
  }
  if (!mat.allFinite()) throw Error(ErrorKind::ShapeError, "non-finite entries");

  std::vector<Violation> violations;
  const double herm = max_abs(mat - mat.adjoint());
  if (herm > tol::kHermitian) violations.push_back({ErrorKind::NotHermitian, herm});

  const double trace_defect = std::abs(mat.trace() - Complex(1.0));
  if (trace_defect > tol::kTrace) violations.push_back({ErrorKind::TraceNotOne, trace_defect});

  const ComplexMatrix herm_part = (mat + mat.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm_part, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol::kPsd) violations.push_back({ErrorKind::NotPSD, -min_eig});

  if (!violations.empty()) throw DensityError(std::move(violations));
  return DensityMatrix(std::move(basis), std::move(mat));
}

DensityMatrix pure_density(const ComplexVector& psi, ModeBasis basis) {
  const double defect = std::abs(psi.squaredNorm() - 1.0);
  if (defect > tol::kNormalization) {
    throw Error(ErrorKind::NotNormalized, "state vector is not normalized", defect);
  }
  return validate_density(psi * psi.adjoint(), std::move(basis));
}

namespace {

void check_weyl_args(Index dim, Index power) {
  if (dim < 2) throw Error(ErrorKind::InvalidDimension, "Weyl operators need dimension >= 2");
  if (power < 0 || power >= dim) {
    throw Error(ErrorKind::InvalidDimension, "Weyl power must lie in [0, dim)");
  }
}

}  // namespace

WeylOperator make_shift(Index dim, Index power) {
  check_weyl_args(dim, power);
  return {dim, power, 0};
}

WeylOperator make_phase(Index dim, Index power) {
  check_weyl_args(dim, power);
  return {dim, 0, power};
}

WeylOperator make_weyl(Index dim, Index shift_power, Index phase_power) {
  check_weyl_args(dim, shift_power);
  check_weyl_args(dim, phase_power);
  return {dim, shift_power, phase_power};
}

Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& a) {
  if (rho.rows() != rho.cols() || a.rows() != rho.cols() || a.cols() != rho.rows()) {
    throw Error(ErrorKind::ShapeError, "expectation: dimension mismatch");
  }
  // trace(rho a) without forming the product
  return (rho.array() * a.transpose().array()).sum();
}

Complex expectation(const DensityMatrix& rho, const ComplexMatrix& a) {
  return expectation(rho.matrix(), a);
}

Complex expectation(const DensityMatrix& rho, const WeylOperator& op) {
  const Index n = rho.dim();
  if (op.dim != n) throw Error(ErrorKind::ShapeError, "expectation: dimension mismatch");
  // trace(rho X^r Z^s) = sum_k omega^{s k} rho_{k, k+r}
  Complex sum{0.0, 0.0};
  for (Index k = 0; k < n; ++k) {
    sum += root_of_unity(n, op.phase_power * k) * rho(k, (k + op.shift_power) % n);
  }
  return sum;
}

}  // namespace oamic
