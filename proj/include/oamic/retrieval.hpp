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

#ifndef OAMIC_RETRIEVAL_HPP
#define OAMIC_RETRIEVAL_HPP

#include <array>
#include <vector>

#include "oamic/invariants.hpp"
#include "oamic/linalg.hpp"

namespace oamic {

/// An M-mode state sent through a crosstalk channel with spill at most l.
/// The initial modes sit at indices offset..offset+M-1 of `rho_out`; only the
/// window offset-l..offset+M-1+l may carry weight.
struct RetrievalProblem {
  Index modes;
  Index spill;
  DensityMatrix rho_out;
  Index offset;
};

struct RetrievalOptions {
  /// |rho_{l,l+M-1}| must exceed this fraction of max|rho_out|.
  double corner_floor = 1e-3;
  double support_tol = 1e-10;
  InvariantOptions invariants{};
};

/// One linear solve: the diagonal (superdiagonal = 0) or superdiagonal S_p.
struct SolveReport {
  Index superdiagonal = 0;
  std::vector<double> residuals;
  double condition_number = 0.0;
};

struct ReconstructedState {
  DensityMatrix rho;
  std::vector<SolveReport> solves;
};

/// True iff <X^{M-1} Z^r> = omega^{offset r} <X^{M-1}> for r = 1..N-1, with
/// rho zero-padded to dimension N.
bool check_condition(const DensityMatrix& rho, Index modes, Index dim, Index offset,
                     double tol = 1e-10);

/// Rebuilds the M x M initial state from invariants of the output alone:
/// the corner from <X^{M-1}>, the diagonal from the I2^{(M-1,s)} family plus
/// the trace, then each superdiagonal S_p from I1^{(p)} and I2^{(p,s)}.
/// Throws IllPosed when the corner element is below the floor and
/// SingularSystem when an equation is lost.
ReconstructedState retrieve_full_state(const RetrievalProblem& problem,
                                       RetrievalOptions opts = {});

/// Relative phase of the Werner-like state from arg rho_32, in (-pi, pi].
double recover_werner_phi(const DensityMatrix& rho_out, InvariantOptions opts = {});

/// Relative phase gamma of the two-photon Kolmogorov output, in (-pi, pi].
double recover_two_qubit_gamma(const DensityMatrix& rho_out, InvariantOptions opts = {});

/// alpha_1..alpha_5 with alpha_1 real positive. Phases come from M1..M4 and
/// magnitudes from |I5|..|I8|.
std::array<Complex, 5> recover_three_qubit_params(const DensityMatrix& rho_out,
                                                  InvariantOptions opts = {});

}  // namespace oamic

#endif  // OAMIC_RETRIEVAL_HPP
