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

#ifndef OAMIC_CODES_HPP
#define OAMIC_CODES_HPP

#include <compare>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oamic/linalg.hpp"

// Ancilla-free codes for idealised crosstalk channels. Codewords occupy
// spaced modes l, l+D, ..., l+(M-1)D so that every spillover error E_{+-k}
// (k <= l) moves the state into a subspace orthogonal to the code:
//   rejection code:  D = l + 1  (errors detectable)
//   correction code: D = 2l + 1 (errors mutually distinguishable)
// Both act on the mode range 0..(M-1)D + 2l, which contains every mode an
// error can reach.

namespace oamic::codes {

/// Symbolic stabiliser outcome: shift 0 is c_M, shift +-k is c_{+-k}.
struct Syndrome {
  int shift = 0;

  std::string label() const;
  friend auto operator<=>(const Syndrome&, const Syndrome&) = default;
};

struct RejectionCode {
  Index logical_dim = 0;
  int spill = 0;
  int spacing = 0;
  std::vector<int> modes;
  ModeBasis space;
  ComplexMatrix code_projector;
  ComplexMatrix error_projector;
};

struct CorrectionCode {
  Index logical_dim = 0;
  int spill = 0;
  int spacing = 0;
  std::vector<int> modes;
  ModeBasis space;
  /// Pi^M under shift 0 and Pi^{E_{+-k}} under +-k.
  std::map<int, ComplexMatrix> projectors;
  /// sum_j |l + jD><l +- k + jD| under +-k; identity under 0.
  std::map<int, ComplexMatrix> corrections;

  std::vector<Syndrome> syndromes() const;
};

RejectionCode build_rejection_code(Index logical_dim, int spill);
CorrectionCode build_correction_code(Index logical_dim, int spill);

/// sum_j alpha_j |l + jD> on the code's mode range.
DensityMatrix encode(const RejectionCode& code, const ComplexVector& amplitudes);
DensityMatrix encode(const CorrectionCode& code, const ComplexVector& amplitudes);
ComplexVector codeword(const CorrectionCode& code, const ComplexVector& amplitudes);
ComplexVector codeword(const RejectionCode& code, const ComplexVector& amplitudes);

struct SyndromeOutcome {
  Syndrome syndrome;
  double probability = 0.0;
  /// Renormalized projected state; empty when the outcome has probability 0.
  std::optional<DensityMatrix> state;
};

/// Exact outcome distribution of the stabiliser, one entry per syndrome.
std::vector<SyndromeOutcome> syndrome_distribution(const CorrectionCode& code,
                                                   const DensityMatrix& rho);

/// Samples one stabiliser outcome with the caller's generator.
SyndromeOutcome measure_syndrome(const CorrectionCode& code, const DensityMatrix& rho,
                                 std::mt19937_64& rng);

/// Undoes the error flagged by `syndrome`. Throws UnknownSyndrome for shifts
/// the code does not cover.
DensityMatrix correct(const CorrectionCode& code, Syndrome syndrome, const DensityMatrix& rho);

struct RejectionDistribution {
  double accept = 0.0;
  double reject = 0.0;
};

struct RejectionResult {
  bool accepted = false;
  double probability = 0.0;
  /// Present only when accepted.
  std::optional<DensityMatrix> state;
};

RejectionDistribution rejection_distribution(const RejectionCode& code, const DensityMatrix& rho);
RejectionResult measure_rejection(const RejectionCode& code, const DensityMatrix& rho,
                                  std::mt19937_64& rng);

/// <psi| rho |psi>.
double fidelity(const DensityMatrix& rho, const ComplexVector& psi);

}  // namespace oamic::codes

#endif  // OAMIC_CODES_HPP
