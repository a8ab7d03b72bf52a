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

#ifndef OAMIC_TURBULENCE_HPP
#define OAMIC_TURBULENCE_HPP

#include <array>
#include <vector>

#include "oamic/linalg.hpp"

// Closed-form output states of multi-photon OAM states after weak turbulence.
//
// Two-photon states use the ordered basis
//   {|l,l>, |l,-l>, |-l,l>, |-l,-l>}
// and three-photon states the ordered basis
//   {|l,l,l>, |l,l,-l>, |l,-l,l>, |l,-l,-l>, |-l,l,l>, |-l,l,-l>, |-l,-l,l>, |-l,-l,-l>}.
// The DensityMatrix basis carries the ordinal index; `product_modes` gives the
// OAM tuple of each ordinal for a concrete l.

namespace oamic::turbulence {

/// Werner-like two-photon state parameters. mu and nu are the survival and
/// crosstalk amplitudes; only their ratio matters.
struct WernerParams {
  double gamma_purity = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  double mu = 1.0;
  double nu = 0.0;
};

struct TwoQubitParams {
  double a = 1.0;
  double b = 0.0;
  double gamma_phase = 0.0;
};

struct ThreeQubitParams {
  /// Coefficients of |l,-l,-l>, |-l,l,-l>, |-l,-l,l>, |l,l,l>, |-l,-l,-l>.
  std::array<Complex, 5> alphas{};
  double a = 1.0;
  double b = 0.0;
};

/// Unnormalized diagonal (G1..G8) and coherence (M1..M20) elements, 1-based
/// to match the usual labelling: g[1]..g[8], m[1]..m[20]; index 0 unused.
struct ThreeQubitElements {
  std::array<double, 9> g{};
  std::array<Complex, 21> m{};
};

/// Matrix position (row, col) of M_k inside the 8x8 output, k = 1..20.
std::array<std::pair<Index, Index>, 21> coherence_positions();

/// Matrix position of G_k on the diagonal, k = 1..8.
Index population_position(int k);

std::vector<std::vector<int>> product_modes(int ell, int photons);

DensityMatrix werner_initial(const WernerParams& p);
/// Applies the survival/crosstalk map to an arbitrary two-photon state:
/// populations mix with weights mu^2, mu nu, nu^2; only rho_14 and rho_23
/// survive among the coherences, scaled by mu^2/(mu+nu)^2.
DensityMatrix werner_map(const DensityMatrix& rho0, double mu, double nu);
DensityMatrix werner_output(const WernerParams& p);
DensityMatrix two_qubit_output(const TwoQubitParams& p);

ThreeQubitElements three_qubit_elements(const ThreeQubitParams& p);
/// Initial pure state |psi_0><psi_0| in the 8-dimensional basis.
DensityMatrix three_qubit_initial(const ThreeQubitParams& p);
/// Assembled from `three_qubit_elements` and normalized by its trace.
DensityMatrix three_qubit_output(const ThreeQubitParams& p);

}  // namespace oamic::turbulence

#endif  // OAMIC_TURBULENCE_HPP
