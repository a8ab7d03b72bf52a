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

#include "oamic/codes.hpp"

#include <algorithm>
#include <cmath>

namespace oamic::codes {

namespace {

constexpr double kSupportTolerance = 1e-12;

void check_params(Index logical_dim, int spill) {
  if (logical_dim < 2) throw Error(ErrorKind::InvalidDimension, "codes need M >= 2");
  if (spill < 1) throw Error(ErrorKind::InvalidDimension, "codes need spill l >= 1");
}

std::vector<int> spaced_modes(Index count, int start, int spacing) {
  std::vector<int> modes(static_cast<std::size_t>(count));
  for (std::size_t j = 0; j < modes.size(); ++j) modes[j] = start + int(j) * spacing;
  return modes;
}

ModeBasis code_space(Index logical_dim, int spill, int spacing) {
  return ModeBasis::range(0, int(logical_dim - 1) * spacing + 2 * spill);
}

ComplexMatrix projector(const ModeBasis& space, const std::vector<int>& modes, int shift) {
  ComplexMatrix p = ComplexMatrix::Zero(space.size(), space.size());
  for (int mode : modes) {
    const Index i = *space.position(mode + shift);
    p(i, i) = 1.0;
  }
  return p;
}

ComplexVector codeword_on(const ModeBasis& space, const std::vector<int>& modes,
                          const ComplexVector& amplitudes) {
  if (amplitudes.size() != Index(modes.size())) {
    throw Error(ErrorKind::ShapeError, "amplitude count must equal the logical dimension");
  }
  const double defect = std::abs(amplitudes.squaredNorm() - 1.0);
  if (defect > tol::kNormalization) {
    throw Error(ErrorKind::NotNormalized, "logical amplitudes are not normalized", defect);
  }
  ComplexVector psi = ComplexVector::Zero(space.size());
  for (std::size_t j = 0; j < modes.size(); ++j) psi(*space.position(modes[j])) = amplitudes(Index(j));
  return psi;
}

void check_state(const ModeBasis& space, const DensityMatrix& rho) {
  if (rho.basis() != space) {
    throw Error(ErrorKind::ShapeError, "state is not expressed on the code's mode range");
  }
}

DensityMatrix project(const ComplexMatrix& p, const DensityMatrix& rho, double prob) {
  ComplexMatrix post = p * rho.matrix() * p / prob;
  return validate_density(std::move(post), rho.basis());
}

}  // namespace

std::string Syndrome::label() const {
  if (shift == 0) return "c_M";
  return shift > 0 ? "c_+" + std::to_string(shift) : "c_" + std::to_string(shift);
}

std::vector<Syndrome> CorrectionCode::syndromes() const {
  std::vector<Syndrome> out;
  for (const auto& [shift, p] : projectors) out.push_back({shift});
  return out;
}

RejectionCode build_rejection_code(Index logical_dim, int spill) {
  check_params(logical_dim, spill);
  RejectionCode code;
  code.logical_dim = logical_dim;
  code.spill = spill;
  code.spacing = spill + 1;
  code.modes = spaced_modes(logical_dim, spill, code.spacing);
  code.space = code_space(logical_dim, spill, code.spacing);
  code.code_projector = projector(code.space, code.modes, 0);

  // union of the corrupted subspaces; errors of different k may overlap
  const Index n = code.space.size();
  code.error_projector = ComplexMatrix::Zero(n, n);
  for (int k = 1; k <= spill; ++k) {
    for (int sign : {+1, -1}) {
      const ComplexMatrix p = projector(code.space, code.modes, sign * k);
      for (Index i = 0; i < n; ++i) {
        if (p(i, i) != 0.0) code.error_projector(i, i) = 1.0;
      }
    }
  }
  return code;
}

CorrectionCode build_correction_code(Index logical_dim, int spill) {
  check_params(logical_dim, spill);
  CorrectionCode code;
  code.logical_dim = logical_dim;
  code.spill = spill;
  code.spacing = 2 * spill + 1;
  code.modes = spaced_modes(logical_dim, spill, code.spacing);
  code.space = code_space(logical_dim, spill, code.spacing);

  const Index n = code.space.size();
  for (int shift = -spill; shift <= spill; ++shift) {
    code.projectors.emplace(shift, projector(code.space, code.modes, shift));
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    for (int mode : code.modes) c(*code.space.position(mode), *code.space.position(mode + shift)) = 1.0;
    code.corrections.emplace(shift, std::move(c));
  }
  return code;
}

ComplexVector codeword(const CorrectionCode& code, const ComplexVector& amplitudes) {
  return codeword_on(code.space, code.modes, amplitudes);
}

ComplexVector codeword(const RejectionCode& code, const ComplexVector& amplitudes) {
  return codeword_on(code.space, code.modes, amplitudes);
}

DensityMatrix encode(const RejectionCode& code, const ComplexVector& amplitudes) {
  return pure_density(codeword(code, amplitudes), code.space);
}

DensityMatrix encode(const CorrectionCode& code, const ComplexVector& amplitudes) {
  return pure_density(codeword(code, amplitudes), code.space);
}

std::vector<SyndromeOutcome> syndrome_distribution(const CorrectionCode& code,
                                                   const DensityMatrix& rho) {
  check_state(code.space, rho);
  std::vector<SyndromeOutcome> outcomes;
  double total = 0.0;
  for (const auto& [shift, p] : code.projectors) {
    const double prob = std::max(0.0, expectation(rho, p).real());
    total += prob;
    SyndromeOutcome o{Syndrome{shift}, prob, std::nullopt};
    if (prob > kSupportTolerance) o.state = project(p, rho, prob);
    outcomes.push_back(std::move(o));
  }
  if (std::abs(total - 1.0) > kSupportTolerance) {
    throw Error(ErrorKind::ShapeError, "state has weight outside every stabiliser subspace",
                std::abs(total - 1.0));
  }
  return outcomes;
}

SyndromeOutcome measure_syndrome(const CorrectionCode& code, const DensityMatrix& rho,
                                 std::mt19937_64& rng) {
  std::vector<SyndromeOutcome> outcomes = syndrome_distribution(code, rho);
  std::vector<double> weights;
  for (const auto& o : outcomes) weights.push_back(o.probability);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  return std::move(outcomes[pick(rng)]);
}

DensityMatrix correct(const CorrectionCode& code, Syndrome syndrome, const DensityMatrix& rho) {
  const auto it = code.corrections.find(syndrome.shift);
  if (it == code.corrections.end()) {
    throw Error(ErrorKind::UnknownSyndrome, "no correction for syndrome " + syndrome.label());
  }
  check_state(code.space, rho);
  if (syndrome.shift == 0) return rho;
  const ComplexMatrix& c = it->second;
  return validate_density(c * rho.matrix() * c.adjoint(), code.space);
}

RejectionDistribution rejection_distribution(const RejectionCode& code, const DensityMatrix& rho) {
  check_state(code.space, rho);
  const double accept = std::max(0.0, expectation(rho, code.code_projector).real());
  const double reject = std::max(0.0, expectation(rho, code.error_projector).real());
  if (std::abs(accept + reject - 1.0) > kSupportTolerance) {
    throw Error(ErrorKind::ShapeError, "state has weight outside the code and error subspaces",
                std::abs(accept + reject - 1.0));
  }
  return {accept, reject};
}

RejectionResult measure_rejection(const RejectionCode& code, const DensityMatrix& rho,
                                  std::mt19937_64& rng) {
  const RejectionDistribution dist = rejection_distribution(code, rho);
  std::bernoulli_distribution coin(dist.accept);
  if (coin(rng)) return {true, dist.accept, project(code.code_projector, rho, dist.accept)};
  return {false, dist.reject, std::nullopt};
}

double fidelity(const DensityMatrix& rho, const ComplexVector& psi) {
  if (psi.size() != rho.dim()) throw Error(ErrorKind::ShapeError, "fidelity: dimension mismatch");
  return (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
}

}  // namespace oamic::codes
