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

#ifndef OAMIC_LINALG_HPP
#define OAMIC_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "oamic/error.hpp"

namespace oamic {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

template <typename Scalar>
using ComplexMatrixT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

namespace tol {
inline constexpr double kHermitian = 1e-9;
inline constexpr double kTrace = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kNormalization = 1e-9;
}  // namespace tol

/// exp(2 pi i k / n), the principal n-th root of unity raised to k.
/// k is reduced mod n first so that large or negative powers stay accurate.
template <typename Scalar = double>
std::complex<Scalar> root_of_unity(Index n, Index k) {
  Index r = k % n;
  if (r < 0) r += n;
  if (r == 0) return {Scalar(1), Scalar(0)};
  const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(r) / Scalar(n);
  return std::polar(Scalar(1), angle);
}

/// X^r: |k> -> |k + r mod n>. Any integer power is accepted.
template <typename Scalar = double>
ComplexMatrixT<Scalar> shift_matrix(Index n, Index r) {
  ComplexMatrixT<Scalar> x = ComplexMatrixT<Scalar>::Zero(n, n);
  Index s = r % n;
  if (s < 0) s += n;
  for (Index k = 0; k < n; ++k) x((k + s) % n, k) = Scalar(1);
  return x;
}

/// Z^s = diag(omega^{s k}).
template <typename Scalar = double>
ComplexMatrixT<Scalar> phase_matrix(Index n, Index s) {
  ComplexMatrixT<Scalar> z = ComplexMatrixT<Scalar>::Zero(n, n);
  for (Index k = 0; k < n; ++k) z(k, k) = root_of_unity<Scalar>(n, s * k);
  return z;
}

/// X^r Z^s.
template <typename Scalar = double>
ComplexMatrixT<Scalar> weyl_matrix(Index n, Index r, Index s) {
  ComplexMatrixT<Scalar> w = ComplexMatrixT<Scalar>::Zero(n, n);
  Index sh = r % n;
  if (sh < 0) sh += n;
  for (Index k = 0; k < n; ++k) w((k + sh) % n, k) = root_of_unity<Scalar>(n, s * k);
  return w;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : double(m.cwiseAbs().maxCoeff());
}

/// Ordered, strictly increasing list of integer mode labels (OAM indices).
class ModeBasis {
 public:
  ModeBasis() = default;
  explicit ModeBasis(std::vector<int> labels);

  /// Contiguous labels first..last inclusive.
  static ModeBasis range(int first, int last);
  /// Abstract labels 0..n-1.
  static ModeBasis indices(Index n);

  Index size() const noexcept { return Index(labels_.size()); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int operator[](Index i) const { return labels_[std::size_t(i)]; }
  std::optional<Index> position(int label) const;

  friend bool operator==(const ModeBasis&, const ModeBasis&) = default;

 private:
  std::vector<int> labels_;
};

/// Hermitian, unit-trace, positive semidefinite matrix attached to a basis.
/// Only `validate_density` creates these.
class DensityMatrix {
 public:
  const ModeBasis& basis() const noexcept { return basis_; }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  Index dim() const noexcept { return mat_.rows(); }
  Complex operator()(Index i, Index j) const { return mat_(i, j); }

 private:
  friend DensityMatrix validate_density(ComplexMatrix, ModeBasis);
  DensityMatrix(ModeBasis basis, ComplexMatrix mat)
      : basis_(std::move(basis)), mat_(std::move(mat)) {}

  ModeBasis basis_;
  ComplexMatrix mat_;
};

struct Violation {
  ErrorKind kind;
  double magnitude;
};

/// Thrown by `validate_density`; lists every invariant that failed.
class DensityError : public Error {
 public:
  explicit DensityError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Checks hermiticity, unit trace and positivity (smallest eigenvalue of the
/// Hermitian part) against the tolerances in `tol`.
DensityMatrix validate_density(ComplexMatrix mat, ModeBasis basis);

/// |psi><psi| for a normalized amplitude vector.
DensityMatrix pure_density(const ComplexVector& psi, ModeBasis basis);

struct WeylOperator {
  Index dim = 0;
  Index shift_power = 0;
  Index phase_power = 0;

  ComplexMatrix matrix() const { return weyl_matrix<double>(dim, shift_power, phase_power); }
};

/// Checked constructors: N >= 2 and 0 <= power < N.
WeylOperator make_shift(Index dim, Index power);
WeylOperator make_phase(Index dim, Index power);
WeylOperator make_weyl(Index dim, Index shift_power, Index phase_power);

/// trace(rho A).
Complex expectation(const DensityMatrix& rho, const ComplexMatrix& a);
Complex expectation(const DensityMatrix& rho, const WeylOperator& op);
Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& a);

}  // namespace oamic

#endif  // OAMIC_LINALG_HPP
