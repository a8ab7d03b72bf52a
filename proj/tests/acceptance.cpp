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

// Standalone acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "oamic/channels.hpp"
#include "oamic/cli/analysis.hpp"
#include "oamic/codes.hpp"
#include "oamic/invariants.hpp"
#include "oamic/retrieval.hpp"
#include "oamic/turbulence.hpp"
#include "test_support.hpp"

namespace {

using namespace oamic;
using oamic::testing::max_diff;
using oamic::testing::Rng;
using std::numbers::pi;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

RetrievalProblem simulate(const DensityMatrix& rho, const SpilloverSpec& spec) {
  const int lo = rho.basis()[0];
  const int hi = rho.basis()[rho.dim() - 1];
  return {rho.dim(), spec.max_spill(), apply_channel(build_ic_channel(lo, hi, spec), rho),
          spec.max_spill()};
}

std::string crosstalk_matches_flip() {
  Rng rng(101);
  double worst = 0.0;
  int cases = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int l = 0; l <= 3; ++l) {
      const Index n = m + 2 * l;
      if (n < 2) continue;
      for (int t = 0; t < 100; ++t, ++cases) {
        const SpilloverSpec spec = testing::random_spec(rng, l);
        const DensityMatrix rho = testing::random_state(rng, ModeBasis::range(l, l + m - 1));
        const DensityMatrix ic = apply_channel(build_ic_channel(l, l + m - 1, spec), rho);
        const DensityMatrix flip =
            apply_channel(build_flip_channel(n, spec), embed_state(rho, n, l));
        worst = std::max(worst, max_diff(ic.matrix(), flip.matrix()));
      }
    }
  }
  require(worst <= 1e-12, "max deviation " + num(worst));
  return std::to_string(cases) + " cases, max deviation " + num(worst);
}

std::string flip_invariants_preserved() {
  Rng rng(102);
  double worst_one = 0.0, worst_two = 0.0;
  int checked = 0, skipped = 0;
  for (Index n = 2; n <= 7; ++n) {
    for (int l = 1; l <= 3; ++l) {
      for (int t = 0; t < 20; ++t) {
        const DensityMatrix rho = testing::random_state(rng, ModeBasis::indices(n));
        const DensityMatrix out = apply_channel(build_flip_channel(n, testing::random_spec(rng, l)), rho);
        for (Index m = 1; m < n; ++m) {
          worst_one = std::max(
              worst_one, std::abs(family_one(rho, m).value - family_one(out, m).value));
          for (Index s = 1; s < n; ++s) {
            InvariantValue a, b;
            try {
              a = family_two(rho, m, s);
              b = family_two(out, m, s);
            } catch (const Error&) {
              ++skipped;
              continue;
            }
            if (!a.well_conditioned || !b.well_conditioned) {
              ++skipped;
              continue;
            }
            ++checked;
            worst_two = std::max(worst_two,
                                 std::abs(a.value - b.value) / std::max(1.0, std::abs(a.value)));
          }
        }
      }
    }
  }
  require(worst_one <= 1e-12, "family one deviation " + num(worst_one));
  require(worst_two <= 1e-10, "family two deviation " + num(worst_two));
  require(checked > 0, "no well-conditioned family two cases");
  return "family one " + num(worst_one) + ", family two " + num(worst_two) + " over " +
         std::to_string(checked) + " ratios (" + std::to_string(skipped) + " ill-conditioned)";
}

std::string full_state_retrieval() {
  const DensityMatrix qutrit =
      validate_density(ComplexMatrix::Constant(3, 3, 1.0 / 3.0), ModeBasis::range(1, 3));
  const double exact = max_diff(retrieve_full_state(simulate(qutrit, {{0.5, 0.25}})).rho.matrix(),
                                qutrit.matrix());
  require(exact <= 1e-12, "uniform qutrit deviation " + num(exact));

  Rng rng(103);
  double worst = 0.0, spread = 0.0;
  int trips = 0;
  for (int m = 2; m <= 5; ++m) {
    for (int l = 1; l <= 3; ++l) {
      for (int t = 0; t < 20; ++t, ++trips) {
        const DensityMatrix rho =
            testing::random_state_with_corner(rng, ModeBasis::range(l, l + m - 1), 0.01);
        const auto a = retrieve_full_state(simulate(rho, testing::random_spec(rng, l)));
        const auto b = retrieve_full_state(simulate(rho, testing::random_spec(rng, l)));
        worst = std::max(worst, max_diff(a.rho.matrix(), rho.matrix()));
        spread = std::max(spread, max_diff(a.rho.matrix(), b.rho.matrix()));
      }
    }
  }
  require(worst <= 1e-8, "round-trip deviation " + num(worst));
  require(spread <= 1e-10, "channel dependence " + num(spread));
  return std::to_string(trips) + " round trips, max error " + num(worst) +
         ", channel spread " + num(spread);
}

double grid_angle(int k) { return -pi + (k + 1) * (2.0 * pi / 72.0); }

std::string werner_phase() {
  Rng rng(104);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 72; ++k) {
    const turbulence::WernerParams w{u(rng), 0.2 + 2.5 * u(rng), grid_angle(k), u(rng), u(rng)};
    const DensityMatrix out = turbulence::werner_output(w);
    worst = std::max(worst, testing::angle_distance(recover_werner_phi(out), grid_angle(k)));
    const auto ratios = werner_ratio_invariants(out);
    for (const InvariantValue& r : ratios) {
      require(!r.well_conditioned || std::abs(r.value) <= 1e-10,
              "nonzero ratio invariant " + num(std::abs(r.value)));
    }
  }
  require(worst <= 1e-10, "phase error " + num(worst));
  return "72 phases, max error " + num(worst);
}

std::string two_qubit_phase() {
  Rng rng(105);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double worst = 0.0, trace = 0.0;
  for (int k = 0; k < 72; ++k) {
    const DensityMatrix out = turbulence::two_qubit_output({u(rng), u(rng), grid_angle(k)});
    worst = std::max(worst, testing::angle_distance(recover_two_qubit_gamma(out), grid_angle(k)));
    trace = std::max(trace, std::abs(out.matrix().trace() - Complex(1.0)));
  }
  require(worst <= 1e-10, "phase error " + num(worst));
  require(trace <= 1e-14, "trace defect " + num(trace));
  return "72 phases, max error " + num(worst) + ", trace defect " + num(trace);
}

double invariant_gap(const std::vector<InvariantValue>& a, const std::vector<InvariantValue>& b) {
  require(a.size() == b.size(), "invariant count mismatch");
  double gap = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    require(a[k].well_conditioned == b[k].well_conditioned,
            "conditioning differs for invariant " + std::to_string(k + 1));
    if (a[k].well_conditioned) {
      gap = std::max(gap, std::abs(a[k].value - b[k].value) / std::max(1.0, std::abs(a[k].value)));
    }
  }
  return gap;
}

std::string three_qubit() {
  Rng rng(106);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double gap = 0.0, worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    turbulence::ThreeQubitParams p;
    const ComplexVector v = testing::random_unit_vector(rng, 5);
    for (Index k = 0; k < 5; ++k) p.alphas[std::size_t(k)] = v(k);
    turbulence::ThreeQubitParams clean = p;
    clean.a = 1.0;
    clean.b = 0.0;
    p.a = 0.1 + u(rng);
    p.b = u(rng);
    const DensityMatrix noisy = turbulence::three_qubit_output(p);
    const DensityMatrix ideal = turbulence::three_qubit_output(clean);
    gap = std::max(gap, invariant_gap(three_qubit_invariants(ideal), three_qubit_invariants(noisy)));
    gap = std::max(gap, invariant_gap(three_qubit_retrieval_invariants(ideal),
                                      three_qubit_retrieval_invariants(noisy)));

    const auto got = recover_three_qubit_params(noisy);
    const Complex gauge = std::conj(p.alphas[0]) / std::abs(p.alphas[0]);
    for (std::size_t k = 0; k < 5; ++k) {
      worst = std::max(worst, std::abs(got[k] - p.alphas[k] * gauge));
    }
  }
  require(gap <= 1e-10, "invariant drift " + num(gap));
  require(worst <= 1e-8, "parameter error " + num(worst));
  return "100 states, invariant drift " + num(gap) + ", parameter error " + num(worst);
}

std::string correction_code() {
  Rng rng(107);
  double worst = 1.0;
  int cases = 0;
  for (Index m = 2; m <= 5; ++m) {
    for (int l = 1; l <= 3; ++l) {
      const codes::CorrectionCode code = codes::build_correction_code(m, l);
      for (int t = 0; t < 10; ++t) {
        const ComplexVector amps = testing::random_unit_vector(rng, m);
        const ComplexVector psi = codes::codeword(code, amps);
        for (int k = -l; k <= l; ++k, ++cases) {
          const ComplexVector hit = spillover_operator(code.space, code.space, k) * psi;
          const DensityMatrix corrupted = pure_density(hit, code.space);
          for (const auto& o : codes::syndrome_distribution(code, corrupted)) {
            if (!o.state) continue;
            require(o.syndrome.shift == k, "syndrome " + o.syndrome.label() + " for shift " +
                                               std::to_string(k));
            worst = std::min(worst, codes::fidelity(codes::correct(code, o.syndrome, *o.state), psi));
          }
        }
      }
    }
  }
  require(worst >= 1.0 - 1e-12, "fidelity " + num(worst));

  const codes::CorrectionCode c31 = codes::build_correction_code(3, 1);
  require(c31.modes == std::vector<int>{1, 4, 7}, "M=3, l=1 codewords are not {1, 4, 7}");
  const ComplexMatrix& up = c31.corrections.at(1);
  for (int mode : {1, 4, 7}) {
    require(up(mode, mode + 1) == 1.0 && c31.corrections.at(-1)(mode, mode - 1) == 1.0,
            "correction does not return mode " + std::to_string(mode));
  }
  return std::to_string(cases) + " single errors, min fidelity " + num(worst);
}

std::string rejection_code() {
  Rng rng(108);
  int cases = 0;
  for (Index m = 2; m <= 5; ++m) {
    for (int l = 1; l <= 3; ++l) {
      const codes::RejectionCode code = codes::build_rejection_code(m, l);
      for (int t = 0; t < 10; ++t) {
        const ComplexVector psi = codes::codeword(code, testing::random_unit_vector(rng, m));
        const auto clean = codes::rejection_distribution(code, pure_density(psi, code.space));
        require(std::abs(clean.accept - 1.0) <= 1e-12, "codeword acceptance " + num(clean.accept));
        for (int k = -l; k <= l; ++k) {
          if (k == 0) continue;
          ++cases;
          const ComplexVector hit = spillover_operator(code.space, code.space, k) * psi;
          const auto bad = codes::rejection_distribution(code, pure_density(hit, code.space));
          require(bad.accept <= 1e-12, "corrupted acceptance " + num(bad.accept));
        }
      }
    }
  }
  return std::to_string(cases) + " corrupted states rejected";
}

std::string condition_check() {
  Rng rng(109);
  int cases = 0;
  for (Index m = 2; m <= 5; ++m) {
    for (Index l = 0; l <= 3; ++l) {
      const Index n = retrieval_dimension(m, l);
      for (int t = 0; t < 10; ++t, ++cases) {
        const DensityMatrix block = testing::random_state(rng, ModeBasis::indices(m));
        require(check_condition(embed_state(block, n, l), m, n, l),
                "condition fails at M=" + std::to_string(m) + " l=" + std::to_string(l));
      }
    }
  }
  const DensityMatrix rho = testing::random_state(rng, ModeBasis::indices(3));
  require(!check_condition(rho, 3, 3, 0), "no counterexample at N < 2M - 1");
  return std::to_string(cases) + " embedded states satisfy it; N = M = 3 violates it";
}

std::string intensity_fits() {
  const auto line = cli::analyze_intensities({{0, 0, 0.1}, {1, 0, 0.3}, {2, 0, 0.5}});
  require(line.size() == 1 && std::abs(line[0].slope - 0.2) <= 1e-15 &&
              std::abs(line[0].intercept - 0.1) <= 1e-15,
          "linear data not recovered");

  Rng rng(110);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    std::vector<cli::IntensityRecord> records;
    for (int mode = 6; mode <= 16; ++mode) records.push_back({mode, -1, u(rng)});
    Eigen::Matrix2d ata = Eigen::Matrix2d::Zero();
    Eigen::Vector2d aty = Eigen::Vector2d::Zero();
    for (const auto& r : records) {
      const Eigen::Vector2d row(r.initial_mode, 1.0);
      ata += row * row.transpose();
      aty += row * r.relative_intensity;
    }
    const Eigen::Vector2d sol = ata.ldlt().solve(aty);
    const auto fit = cli::analyze_intensities(records);
    worst = std::max({worst, std::abs(fit[0].slope - sol(0)), std::abs(fit[0].intercept - sol(1))});
  }
  require(worst <= 1e-12, "deviation from normal equations " + num(worst));
  return "linear data exact, normal-equation deviation " + num(worst);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"crosstalk equals embedded flip channel", crosstalk_matches_flip},
      {"flip channel invariants preserved", flip_invariants_preserved},
      {"full state retrieval", full_state_retrieval},
      {"Werner phase recovery", werner_phase},
      {"two-qubit phase recovery", two_qubit_phase},
      {"three-qubit invariants and recovery", three_qubit},
      {"correction code", correction_code},
      {"rejection code", rejection_code},
      {"retrieval condition", condition_check},
      {"intensity fits", intensity_fits},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, check] = criteria[i];
    std::string detail;
    bool ok = false;
    try {
      detail = check();
      ok = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << name << " (" << detail
              << ")\n";
  }
  return failures == 0 ? 0 : 1;
}
