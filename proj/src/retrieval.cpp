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

#include "oamic/retrieval.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oamic/channels.hpp"
#include "oamic/turbulence.hpp"

namespace oamic {

bool check_condition(const DensityMatrix& rho, Index modes, Index dim, Index offset,
                     double tol) {
  if (modes < 2 || rho.dim() > dim || offset < 0 || offset + modes > dim) {
    throw Error(ErrorKind::ShapeError, "condition check: state does not fit the dimension");
  }
  const DensityMatrix padded = embed_state(rho, dim, 0);
  const Complex base = expectation(padded, WeylOperator{dim, modes - 1, 0});
  for (Index r = 1; r < dim; ++r) {
    const Complex lhs = expectation(padded, WeylOperator{dim, modes - 1, r});
    if (std::abs(lhs - root_of_unity(dim, offset * r) * base) > tol) return false;
  }
  return true;
}

namespace {

/// Least-squares solve of the Vandermonde-type system; throws SingularSystem
/// when the matrix is numerically rank deficient.
ComplexVector solve_system(const ComplexMatrix& a, const ComplexVector& b, Index superdiagonal,
                           std::vector<SolveReport>& reports) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  const double cond = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
  if (!std::isfinite(cond) || cond > 1e12) {
    throw Error(ErrorKind::SingularSystem,
                "retrieval system for superdiagonal " + std::to_string(superdiagonal) +
                    " is singular",
                cond);
  }
  ComplexVector x = a.completeOrthogonalDecomposition().solve(b);
  SolveReport report;
  report.superdiagonal = superdiagonal;
  report.condition_number = cond;
  const ComplexVector res = a * x - b;
  for (Index i = 0; i < res.size(); ++i) report.residuals.push_back(std::abs(res(i)));
  reports.push_back(std::move(report));
  return x;
}

}  // namespace

ReconstructedState retrieve_full_state(const RetrievalProblem& problem, RetrievalOptions opts) {
  const Index m = problem.modes;
  const Index l = problem.spill;
  const DensityMatrix& out = problem.rho_out;
  if (m < 2 || l < 0) throw Error(ErrorKind::ShapeError, "retrieval needs M >= 2 and l >= 0");

  const Index lo = problem.offset - l;
  const Index width = m + 2 * l;
  if (lo < 0 || lo + width > out.dim()) {
    throw Error(ErrorKind::ShapeError, "reachable window lies outside the output state");
  }
  // everything outside the reachable window must vanish
  {
    ComplexMatrix outside = out.matrix();
    outside.block(lo, lo, width, width).setZero();
    const double stray = max_abs(outside);
    if (stray > opts.support_tol) {
      throw Error(ErrorKind::ShapeError, "output state has weight outside the reachable modes",
                  stray);
    }
  }

  const Index n = retrieval_dimension(m, l);
  ComplexMatrix padded = ComplexMatrix::Zero(n, n);
  padded.topLeftCorner(width, width) = out.matrix().block(lo, lo, width, width);
  const DensityMatrix work = validate_density(std::move(padded), ModeBasis::indices(n));
  const double thr = opts.invariants.denominator_tol * max_abs(work.matrix());

  // initial mode k (0-based within the state) sits at working index l + k
  const auto node = [&](Index k, Index s) { return root_of_unity(n, (l + k) * s); };
  const auto z_moment = [&](Index s) { return expectation(work, WeylOperator{n, 0, s}); };
  const auto xz_moment = [&](Index p, Index s) { return expectation(work, WeylOperator{n, p, s}); };

  ComplexMatrix rho = ComplexMatrix::Zero(m, m);
  std::vector<SolveReport> reports;

  // corner element rho_{l, l+M-1}
  const Complex corner = family_one(work, m - 1).value;
  if (std::abs(corner) < opts.corner_floor * max_abs(out.matrix())) {
    throw Error(ErrorKind::IllPosed,
                "corner element rho_{l,l+M-1} is too small; prepare the state with a "
                "non-vanishing outermost coherence",
                std::abs(corner));
  }
  rho(0, m - 1) = corner;

  // diagonal: sum_k omega^{(l+k)s} rho_kk = I2^{(M-1,s)} omega^{ls} corner, plus the trace
  ComplexVector z_sums(m);  // sum_k omega^{(l+k)s} rho_kk of the initial state
  {
    ComplexMatrix a(m, m);
    ComplexVector b(m);
    a.row(0).setOnes();
    b(0) = 1.0;
    for (Index s = 1; s < m; ++s) {
      const InvariantValue inv = make_ratio(z_moment(s), xz_moment(m - 1, s), thr);
      if (!inv.well_conditioned) {
        throw Error(ErrorKind::SingularSystem,
                    "I2^{(M-1," + std::to_string(s) + ")} is undefined on the output state",
                    inv.denominator_magnitude);
      }
      for (Index k = 0; k < m; ++k) a(s, k) = node(k, s);
      b(s) = inv.value * root_of_unity(n, l * s) * corner;
    }
    const ComplexVector diag = solve_system(a, b, 0, reports);
    for (Index k = 0; k < m; ++k) rho(k, k) = diag(k).real();
    for (Index s = 0; s < m; ++s) {
      z_sums(s) = 0.0;
      for (Index k = 0; k < m; ++k) z_sums(s) += node(k, s) * rho(k, k);
    }
  }

  // superdiagonals S_p, outermost first
  for (Index p = m - 2; p >= 1; --p) {
    const Index unknowns = m - p;
    ComplexMatrix a(unknowns, unknowns);
    ComplexVector b(unknowns);
    a.row(0).setOnes();
    b(0) = family_one(work, p).value;
    for (Index s = 1; s < unknowns; ++s) {
      // 1 / I2^{(p,s)}; finite whenever <Z^s> survives the channel
      const InvariantValue inverse = make_ratio(xz_moment(p, s), z_moment(s), thr);
      if (!inverse.well_conditioned) {
        throw Error(ErrorKind::SingularSystem,
                    "<Z^" + std::to_string(s) + "> vanishes on the output state; S_" +
                        std::to_string(p) + " is undetermined",
                    inverse.denominator_magnitude);
      }
      for (Index k = 0; k < unknowns; ++k) a(s, k) = node(k, s);
      b(s) = z_sums(s) * inverse.value;
    }
    const ComplexVector sup = solve_system(a, b, p, reports);
    for (Index k = 0; k < unknowns; ++k) rho(k, k + p) = sup(k);
  }

  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) rho(j, i) = std::conj(rho(i, j));
  }

  std::vector<int> labels(out.basis().labels().begin() + problem.offset,
                          out.basis().labels().begin() + problem.offset + m);
  return {validate_density(std::move(rho), ModeBasis(std::move(labels))), std::move(reports)};
}

namespace {

double phase_of(Complex z) {
  const double angle = std::atan2(z.imag(), z.real());
  return angle <= -std::numbers::pi ? std::numbers::pi : angle;
}

double recover_lower_phase(const DensityMatrix& rho, InvariantOptions opts) {
  if (rho.dim() != 4) throw Error(ErrorKind::ShapeError, "two-photon state must be 4x4");
  const Complex lower = rho(2, 1);
  const double floor = opts.denominator_tol * max_abs(rho.matrix());
  if (std::abs(lower) <= floor) {
    throw Error(ErrorKind::IllConditioned, "rho_23 vanishes; the phase is undefined",
                std::abs(lower));
  }
  return phase_of(lower);
}

}  // namespace

double recover_werner_phi(const DensityMatrix& rho_out, InvariantOptions opts) {
  return recover_lower_phase(rho_out, opts);
}

double recover_two_qubit_gamma(const DensityMatrix& rho_out, InvariantOptions opts) {
  return recover_lower_phase(rho_out, opts);
}

std::array<Complex, 5> recover_three_qubit_params(const DensityMatrix& rho_out,
                                                  InvariantOptions opts) {
  if (rho_out.dim() != 8) throw Error(ErrorKind::ShapeError, "three-photon state must be 8x8");
  const auto pos = turbulence::coherence_positions();
  const auto m = [&](int k) { return rho_out(pos[std::size_t(k)].first, pos[std::size_t(k)].second); };

  const double floor = opts.denominator_tol * max_abs(rho_out.matrix());
  std::string failed;
  for (int k : {1, 2, 3, 4, 10}) {
    if (std::abs(m(k)) <= floor) failed += (failed.empty() ? "M" : ", M") + std::to_string(k);
  }
  if (!failed.empty()) {
    throw Error(ErrorKind::IllConditioned, "vanishing bilinears: " + failed);
  }

  const std::vector<InvariantValue> inv = three_qubit_retrieval_invariants(rho_out, opts);
  // |I5| = |a2|/|a3|, |I6| = |a2|/|a4|, |I7| = |a2|/|a5|, |I8| = |a1|/|a2|
  std::array<double, 5> mag{};
  mag[1] = 1.0;
  mag[0] = std::abs(inv[7].value);
  mag[2] = 1.0 / std::abs(inv[4].value);
  mag[3] = 1.0 / std::abs(inv[5].value);
  mag[4] = 1.0 / std::abs(inv[6].value);
  double total = 0.0;
  for (double v : mag) total += v * v;
  const double scale = 1.0 / std::sqrt(total);

  // M_k = alpha_1 conj(alpha_{k+1}) a^3 with alpha_1 > 0
  std::array<Complex, 5> alphas{};
  alphas[0] = mag[0] * scale;
  for (int k = 1; k <= 4; ++k) {
    alphas[std::size_t(k)] = std::polar(mag[std::size_t(k)] * scale, -phase_of(m(k)));
  }
  return alphas;
}

}  // namespace oamic
