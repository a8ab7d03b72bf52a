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

#include "oamic/turbulence.hpp"

#include <cmath>

namespace oamic::turbulence {

namespace {

void check_amplitudes(double survival, double crosstalk) {
  if (!std::isfinite(survival) || !std::isfinite(crosstalk) || survival < 0.0 ||
      crosstalk < 0.0) {
    throw Error(ErrorKind::ChannelSpecError, "amplitudes must be finite and non-negative");
  }
  if (survival + crosstalk <= 0.0) {
    throw Error(ErrorKind::DegenerateChannel, "survival + crosstalk amplitude is zero");
  }
}

// ordinal positions of alpha_1..alpha_5 in the three-photon basis
constexpr std::array<Index, 5> kAlphaPosition{3, 5, 6, 0, 7};

}  // namespace

std::array<std::pair<Index, Index>, 21> coherence_positions() {
  std::array<std::pair<Index, Index>, 21> pos{};
  pos[1] = {3, 5};
  pos[5] = {5, 3};
  pos[2] = {3, 6};
  pos[9] = {6, 3};
  pos[3] = {3, 0};
  pos[13] = {0, 3};
  pos[4] = {3, 7};
  pos[17] = {7, 3};
  pos[6] = {5, 6};
  pos[10] = {6, 5};
  pos[7] = {5, 0};
  pos[14] = {0, 5};
  pos[8] = {5, 7};
  pos[18] = {7, 5};
  pos[11] = {6, 0};
  pos[15] = {0, 6};
  pos[12] = {6, 7};
  pos[19] = {7, 6};
  pos[16] = {0, 7};
  pos[20] = {7, 0};
  return pos;
}

Index population_position(int k) {
  if (k < 1 || k > 8) throw Error(ErrorKind::ShapeError, "population index out of range");
  return Index(k - 1);
}

std::vector<std::vector<int>> product_modes(int ell, int photons) {
  std::vector<std::vector<int>> modes;
  const int count = 1 << photons;
  for (int code = 0; code < count; ++code) {
    std::vector<int> tuple(static_cast<std::size_t>(photons));
    for (int q = 0; q < photons; ++q) {
      const bool flipped = (code >> (photons - 1 - q)) & 1;
      tuple[std::size_t(q)] = flipped ? -ell : ell;
    }
    modes.push_back(std::move(tuple));
  }
  return modes;
}

DensityMatrix werner_initial(const WernerParams& p) {
  if (!(p.gamma_purity >= 0.0 && p.gamma_purity <= 1.0)) {
    throw Error(ErrorKind::ChannelSpecError, "purity must lie in [0, 1]", p.gamma_purity);
  }
  ComplexVector psi = ComplexVector::Zero(4);
  psi(1) = std::cos(p.theta / 2.0);
  psi(2) = std::polar(std::sin(p.theta / 2.0), p.phi);
  ComplexMatrix rho = (1.0 - p.gamma_purity) / 4.0 * ComplexMatrix::Identity(4, 4) +
                      p.gamma_purity * psi * psi.adjoint();
  return validate_density(std::move(rho), ModeBasis::indices(4));
}

DensityMatrix werner_map(const DensityMatrix& rho0, double mu, double nu) {
  check_amplitudes(mu, nu);
  if (rho0.dim() != 4) throw Error(ErrorKind::ShapeError, "two-photon state must be 4x4");
  const double alpha = 1.0 / ((mu + nu) * (mu + nu));
  const double mm = mu * mu, mn = mu * nu, nn = nu * nu;
  const auto d = [&](Index i) { return rho0(i, i).real(); };

  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  out(0, 0) = alpha * (mm * d(0) + mn * d(1) + mn * d(2) + nn * d(3));
  out(1, 1) = alpha * (mn * d(0) + mm * d(1) + nn * d(2) + mn * d(3));
  out(2, 2) = alpha * (mn * d(0) + nn * d(1) + mm * d(2) + mn * d(3));
  out(3, 3) = alpha * (nn * d(0) + mn * d(1) + mn * d(2) + mm * d(3));
  out(0, 3) = alpha * mm * rho0(0, 3);
  out(1, 2) = alpha * mm * rho0(1, 2);
  // rho_41 and rho_32 by hermiticity
  out(3, 0) = std::conj(out(0, 3));
  out(2, 1) = std::conj(out(1, 2));
  return validate_density(std::move(out), rho0.basis());
}

DensityMatrix werner_output(const WernerParams& p) {
  check_amplitudes(p.mu, p.nu);
  return werner_map(werner_initial(p), p.mu, p.nu);
}

DensityMatrix two_qubit_output(const TwoQubitParams& p) {
  check_amplitudes(p.a, p.b);
  const double a2 = p.a * p.a, b2 = p.b * p.b, ab = p.a * p.b;
  const double norm = 1.0 / (2.0 * (p.a + p.b) * (p.a + p.b));
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 2.0 * ab * norm;
  rho(1, 1) = (a2 + b2) * norm;
  rho(2, 2) = (a2 + b2) * norm;
  rho(3, 3) = 2.0 * ab * norm;
  rho(1, 2) = std::polar(a2 * norm, -p.gamma_phase);
  rho(2, 1) = std::polar(a2 * norm, p.gamma_phase);
  return validate_density(std::move(rho), ModeBasis::indices(4));
}

ThreeQubitElements three_qubit_elements(const ThreeQubitParams& p) {
  check_amplitudes(p.a, p.b);
  double total = 0.0;
  for (const auto& c : p.alphas) total += std::norm(c);
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorKind::NotNormalized, "sum |alpha_i|^2 must equal 1", std::abs(total - 1.0));
  }

  const auto& al = p.alphas;
  const double n1 = std::norm(al[0]), n2 = std::norm(al[1]), n3 = std::norm(al[2]),
               n4 = std::norm(al[3]), n5 = std::norm(al[4]);
  const double a = p.a, b = p.b;
  const double a3 = a * a * a, b3 = b * b * b, a2b = a * a * b, ab2 = a * b * b;

  ThreeQubitElements e;
  auto& g = e.g;
  g[1] = n4 * a3 + (n1 + n2 + n3) * ab2 + n5 * b3;
  g[2] = (n1 + n4 + n2) * a2b + n5 * ab2 + n3 * b3;
  g[3] = (n1 + n3 + n4) * a2b + n2 * b3 + n5 * ab2;
  g[4] = n1 * a3 + (n2 + n3 + n4) * ab2 + n5 * a2b;
  g[5] = n1 * b3 + (n2 + n3 + n4) * a2b + n5 * ab2;
  g[6] = n2 * a3 + (n1 + n3 + n4) * ab2 + n5 * a2b;
  g[7] = n3 * a3 + (n1 + n2 + n4) * ab2 + n5 * a2b;
  g[8] = n5 * a3 + (n1 + n2 + n3) * a2b + n4 * b3;

  auto& m = e.m;
  const auto bil = [&](int i, int j) { return al[std::size_t(i - 1)] * std::conj(al[std::size_t(j - 1)]) * a3; };
  m[1] = bil(1, 2);
  m[2] = bil(1, 3);
  m[3] = bil(1, 4);
  m[4] = bil(1, 5);
  m[6] = bil(2, 3);
  m[7] = bil(2, 4);
  m[8] = bil(2, 5);
  m[11] = bil(3, 4);
  m[12] = bil(3, 5);
  m[16] = bil(4, 5);
  // conjugate partners
  m[5] = std::conj(m[1]);
  m[9] = std::conj(m[2]);
  m[13] = std::conj(m[3]);
  m[17] = std::conj(m[4]);
  m[10] = std::conj(m[6]);
  m[14] = std::conj(m[7]);
  m[18] = std::conj(m[8]);
  m[15] = std::conj(m[11]);
  m[19] = std::conj(m[12]);
  m[20] = std::conj(m[16]);
  return e;
}

DensityMatrix three_qubit_initial(const ThreeQubitParams& p) {
  ComplexVector psi = ComplexVector::Zero(8);
  for (std::size_t i = 0; i < 5; ++i) psi(kAlphaPosition[i]) = p.alphas[i];
  return pure_density(psi, ModeBasis::indices(8));
}

DensityMatrix three_qubit_output(const ThreeQubitParams& p) {
  const ThreeQubitElements e = three_qubit_elements(p);
  ComplexMatrix rho = ComplexMatrix::Zero(8, 8);
  for (int k = 1; k <= 8; ++k) rho(population_position(k), population_position(k)) = e.g[std::size_t(k)];
  const auto pos = coherence_positions();
  for (int k = 1; k <= 20; ++k) rho(pos[std::size_t(k)].first, pos[std::size_t(k)].second) = e.m[std::size_t(k)];
  const Complex trace = rho.trace();
  rho /= trace;
  return validate_density(std::move(rho), ModeBasis::indices(8));
}

}  // namespace oamic::turbulence
