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

#ifndef OAMIC_TESTS_TEST_SUPPORT_HPP
#define OAMIC_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "oamic/channels.hpp"
#include "oamic/linalg.hpp"

namespace oamic::testing {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline ComplexVector random_unit_vector(Rng& rng, Index dim) {
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = gaussian_complex(rng);
  return v / v.norm();
}

/// G G^dag / tr with G a dim x rank complex Ginibre matrix.
inline ComplexMatrix random_density_matrix(Rng& rng, Index dim, Index rank = 0) {
  if (rank <= 0) rank = dim;
  ComplexMatrix g(dim, rank);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < rank; ++j) g(i, j) = gaussian_complex(rng);
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

inline DensityMatrix random_state(Rng& rng, const ModeBasis& basis, Index rank = 0) {
  return validate_density(random_density_matrix(rng, basis.size(), rank), basis);
}

/// A random state whose outermost coherence |rho(0, M-1)| is at least `floor`.
inline DensityMatrix random_state_with_corner(Rng& rng, const ModeBasis& basis, double floor) {
  std::uniform_int_distribution<int> rank_dist(1, int(basis.size()));
  for (;;) {
    ComplexMatrix rho = random_density_matrix(rng, basis.size(), rank_dist(rng));
    if (std::abs(rho(0, basis.size() - 1)) >= floor) return validate_density(rho, basis);
  }
}

/// Random p_0..p_l with every p_k > 0 and p_0 + 2 sum p_k = 1.
inline SpilloverSpec random_spec(Rng& rng, int spill) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(std::size_t(spill) + 1);
  double total = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = u(rng);
    total += k == 0 ? w[k] : 2.0 * w[k];
  }
  for (double& x : w) x /= total;
  return {w};
}

/// Element-wise crosstalk oracle: rho'_{a,b} = sum_k p_|k| rho_{a-k,b-k}, on
/// the output window of width M + 2l with the input at offset l.
inline ComplexMatrix crosstalk_oracle(const ComplexMatrix& rho, const std::vector<double>& probs) {
  const Index m = rho.rows();
  const Index l = Index(probs.size()) - 1;
  const Index n = m + 2 * l;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index k = -l; k <= l; ++k) {
    const double p = probs[std::size_t(k < 0 ? -k : k)];
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < m; ++j) out(i + l + k, j + l + k) += p * rho(i, j);
    }
  }
  return out;
}

/// tr(rho X^r Z^s) = sum_j omega^{s j} rho_{j, j+r}, indices mod N.
inline Complex weyl_moment_oracle(const ComplexMatrix& rho, Index r, Index s) {
  const Index n = rho.rows();
  Complex total = 0.0;
  for (Index j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * double(s * j) / double(n);
    total += std::polar(1.0, angle) * rho(j, (j + r) % n);
  }
  return total;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Smallest eigenvalue of the Hermitian part.
inline double min_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Difference of two angles folded into [0, pi].
inline double angle_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

}  // namespace oamic::testing

#endif  // OAMIC_TESTS_TEST_SUPPORT_HPP
