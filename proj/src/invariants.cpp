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

#include "oamic/invariants.hpp"

#include <cmath>
#include <limits>

#include "oamic/turbulence.hpp"

namespace oamic {

namespace {

constexpr Complex kI{0.0, 1.0};

double threshold(const DensityMatrix& rho, const InvariantOptions& opts) {
  return opts.denominator_tol * max_abs(rho.matrix());
}

void check_power(const DensityMatrix& rho, Index p, const char* what) {
  if (p < 1 || p >= rho.dim()) {
    throw Error(ErrorKind::ShapeError, std::string(what) + " must lie in [1, dim)");
  }
}

}  // namespace

InvariantValue make_ratio(Complex num, Complex den, double thr) {
  InvariantValue v;
  v.denominator_magnitude = std::abs(den);
  v.well_conditioned = v.denominator_magnitude > thr;
  v.value = v.well_conditioned
                ? num / den
                : Complex(std::numeric_limits<double>::quiet_NaN(),
                          std::numeric_limits<double>::quiet_NaN());
  return v;
}

InvariantValue family_one(const DensityMatrix& rho, Index m) {
  check_power(rho, m, "shift power");
  return {expectation(rho, WeylOperator{rho.dim(), m, 0}), 1.0, true};
}

InvariantValue family_two(const DensityMatrix& rho, Index m, Index s, InvariantOptions opts) {
  check_power(rho, m, "shift power");
  check_power(rho, s, "phase power");
  const Complex num = expectation(rho, WeylOperator{rho.dim(), 0, s});
  const Complex den = expectation(rho, WeylOperator{rho.dim(), m, s});
  const double thr = threshold(rho, opts);
  if (std::abs(num) <= thr && std::abs(den) <= thr) {
    throw Error(ErrorKind::IllConditioned,
                "<Z^s> and <X^m Z^s> both vanish; the ratio is undefined", std::abs(den));
  }
  return make_ratio(num, den, thr);
}

InvariantValue tan_phase_invariant(const DensityMatrix& rho, Index i, Index j,
                                   InvariantOptions opts) {
  if (i == j || i < 0 || j < 0 || i >= rho.dim() || j >= rho.dim()) {
    throw Error(ErrorKind::ShapeError, "tan-phase invariant needs two distinct valid indices");
  }
  const Complex lower = rho(j, i);
  const Complex upper = rho(i, j);
  return make_ratio(-kI * (lower - upper), lower + upper, threshold(rho, opts));
}

std::array<InvariantValue, 3> werner_ratio_invariants(const DensityMatrix& rho,
                                                      InvariantOptions opts) {
  if (rho.dim() != 4) throw Error(ErrorKind::ShapeError, "two-photon state must be 4x4");
  const double thr = threshold(rho, opts);
  const auto r = [&](Index i, Index j) { return rho(i, j); };
  return {
      make_ratio(r(0, 0) - r(3, 3), r(1, 1) - r(2, 2), thr),
      make_ratio(r(0, 3) + r(3, 0), r(0, 3) - r(3, 0), thr),
      make_ratio(r(0, 3) + r(3, 0), r(1, 2) + r(2, 1), thr),
  };
}

namespace {

struct Coherences {
  std::array<Complex, 21> m{};
  std::array<double, 9> g{};
};

Coherences read_elements(const DensityMatrix& rho) {
  if (rho.dim() != 8) throw Error(ErrorKind::ShapeError, "three-photon state must be 8x8");
  Coherences c;
  const auto pos = turbulence::coherence_positions();
  for (std::size_t k = 1; k <= 20; ++k) c.m[k] = rho(pos[k].first, pos[k].second);
  for (int k = 1; k <= 8; ++k) {
    const Index p = turbulence::population_position(k);
    c.g[std::size_t(k)] = rho(p, p).real();
  }
  return c;
}

}  // namespace

std::vector<InvariantValue> three_qubit_invariants(const DensityMatrix& rho,
                                                   InvariantOptions opts) {
  const Coherences c = read_elements(rho);
  const double thr = threshold(rho, opts);
  const auto& m = c.m;
  const auto phase = [&](int a, int b) {
    return make_ratio(kI * (m[std::size_t(a)] - m[std::size_t(b)]),
                      m[std::size_t(a)] + m[std::size_t(b)], thr);
  };
  const Complex reference = m[1] + m[5];
  const auto relative = [&](int a, int b) {
    return make_ratio(m[std::size_t(a)] + m[std::size_t(b)], reference, thr);
  };

  std::vector<InvariantValue> inv;
  inv.reserve(20);
  inv.push_back(phase(1, 5));      // I1
  inv.push_back(relative(2, 9));   // I2
  inv.push_back(phase(2, 9));      // I3
  inv.push_back(phase(3, 13));     // I4
  inv.push_back(relative(3, 13));  // I5
  inv.push_back(phase(4, 17));     // I6
  inv.push_back(relative(4, 17));  // I7
  inv.push_back(phase(6, 10));     // I8
  inv.push_back(relative(6, 10));  // I9
  inv.push_back(phase(7, 14));     // I10
  inv.push_back(relative(7, 14));  // I11
  inv.push_back(phase(8, 18));     // I12
  inv.push_back(relative(8, 18));  // I13
  inv.push_back(phase(11, 15));    // I14
  inv.push_back(relative(11, 15)); // I15
  inv.push_back(phase(12, 19));    // I16
  inv.push_back(relative(12, 19)); // I17
  inv.push_back(phase(16, 20));    // I18
  inv.push_back(relative(16, 20)); // I19
  inv.push_back(make_ratio(c.g[4] - c.g[6], c.g[6] - c.g[7], thr));
  return inv;
}

std::vector<InvariantValue> three_qubit_retrieval_invariants(const DensityMatrix& rho,
                                                             InvariantOptions opts) {
  const Coherences c = read_elements(rho);
  const double thr = threshold(rho, opts);
  const auto& m = c.m;
  const auto phase = [&](int a, int b) {
    return make_ratio(-kI * (m[std::size_t(a)] - m[std::size_t(b)]),
                      m[std::size_t(a)] + m[std::size_t(b)], thr);
  };
  const auto ratio = [&](int a, int b) {
    return make_ratio(m[std::size_t(a)], m[std::size_t(b)], thr);
  };
  return {phase(1, 5), phase(2, 9), phase(3, 13), phase(4, 17),
          ratio(1, 2), ratio(1, 3), ratio(1, 4), ratio(2, 10)};
}

}  // namespace oamic
