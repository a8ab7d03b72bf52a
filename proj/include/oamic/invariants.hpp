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

#ifndef OAMIC_INVARIANTS_HPP
#define OAMIC_INVARIANTS_HPP

#include <array>
#include <vector>

#include "oamic/linalg.hpp"

namespace oamic {

/// A (possibly ratio-valued) channel invariant. When the denominator falls
/// below tolerance the value is NaN and `well_conditioned` is false.
struct InvariantValue {
  Complex value{};
  double denominator_magnitude = 0.0;
  bool well_conditioned = false;
};

inline constexpr double kDenominatorTolerance = 1e-8;

/// Denominators are compared against `denominator_tol` times the max-norm
/// of the state, so structural zeros separate cleanly from round-off.
struct InvariantOptions {
  double denominator_tol = kDenominatorTolerance;
};

/// num / den, flagged when |den| <= threshold.
InvariantValue make_ratio(Complex num, Complex den, double threshold);

/// <X^m>, 1 <= m < dim. Preserved exactly by every flip channel.
InvariantValue family_one(const DensityMatrix& rho, Index m);

/// <Z^s> / <X^m Z^s>, 1 <= m, s < dim. Throws IllConditioned when numerator
/// and denominator both vanish; a lone vanishing denominator is flagged.
InvariantValue family_two(const DensityMatrix& rho, Index m, Index s,
                          InvariantOptions opts = {});

/// -i(rho_ji - rho_ij)/(rho_ji + rho_ij) = tan(arg rho_ji). Indices are
/// zero-based, so the (2,3) element of a 4x4 state is (1, 2).
InvariantValue tan_phase_invariant(const DensityMatrix& rho, Index i, Index j,
                                   InvariantOptions opts = {});

/// (rho11-rho44)/(rho22-rho33), (rho14+rho41)/(rho14-rho41),
/// (rho14+rho41)/(rho23+rho32) on a two-photon state.
std::array<InvariantValue, 3> werner_ratio_invariants(const DensityMatrix& rho,
                                                      InvariantOptions opts = {});

/// All twenty three-photon invariants; the phase invariants carry a +i
/// prefactor. Element k-1 holds I_k.
std::vector<InvariantValue> three_qubit_invariants(const DensityMatrix& rho,
                                                   InvariantOptions opts = {});

/// The eight invariants used for parameter recovery, with a -i prefactor:
/// I1..I4 = -i(M_a - M_b)/(M_a + M_b) for the pairs (1,5), (2,9), (3,13),
/// (4,17); I5 = M1/M2, I6 = M1/M3, I7 = M1/M4, I8 = M2/M10.
/// I1 here equals minus I1 of `three_qubit_invariants`.
std::vector<InvariantValue> three_qubit_retrieval_invariants(const DensityMatrix& rho,
                                                             InvariantOptions opts = {});

}  // namespace oamic

#endif  // OAMIC_INVARIANTS_HPP
