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

#include <gtest/gtest.h>

#include "oamic/channels.hpp"
#include "oamic/codes.hpp"
#include "test_support.hpp"

namespace oamic::codes {
namespace {

using testing::max_diff;

DensityMatrix corrupt(const ModeBasis& space, const ComplexVector& psi, int shift) {
  return pure_density(spillover_operator(space, space, shift) * psi, space);
}

DensityMatrix through_channel(const std::vector<int>& modes, const SpilloverSpec& spec,
                              const DensityMatrix& rho) {
  return apply_channel(build_ic_channel(modes.front(), modes.back(), spec), rho);
}

ComplexVector logical(std::initializer_list<Complex> amps) {
  ComplexVector v(Index(amps.size()));
  Index i = 0;
  for (const Complex& a : amps) v(i++) = a;
  return v;
}

TEST(RejectionCode, ModeLayout) {
  EXPECT_EQ(build_rejection_code(2, 1).modes, (std::vector<int>{1, 3}));
  const RejectionCode c = build_rejection_code(3, 2);
  EXPECT_EQ(c.modes, (std::vector<int>{2, 5, 8}));
  EXPECT_EQ(c.spacing, 3);
  EXPECT_EQ(c.space, ModeBasis::range(0, 10));
}

TEST(RejectionCode, CorruptedStateIsRejected) {
  const RejectionCode c = build_rejection_code(2, 1);
  const ComplexVector psi = codeword(c, logical({0.6, Complex(0.0, 0.8)}));
  const RejectionDistribution clean = rejection_distribution(c, encode(c, logical({0.6, Complex(0.0, 0.8)})));
  EXPECT_NEAR(clean.accept, 1.0, 1e-15);
  const RejectionDistribution bad = rejection_distribution(c, corrupt(c.space, psi, +1));
  EXPECT_NEAR(bad.accept, 0.0, 1e-15);
  EXPECT_NEAR(bad.reject, 1.0, 1e-15);
}

TEST(RejectionCode, InvalidParameters) {
  EXPECT_THROW(build_rejection_code(1, 1), Error);
  EXPECT_THROW(build_rejection_code(3, 0), Error);
}

TEST(RejectionCode, SampledMeasurementUnderChannel) {
  const RejectionCode c = build_rejection_code(3, 1);
  const ComplexVector amps = logical({0.6, Complex(0.0, 0.48), 0.64});
  const DensityMatrix out = through_channel(c.modes, {{0.5, 0.25}}, encode(c, amps));
  const RejectionDistribution d = rejection_distribution(c, out);
  EXPECT_NEAR(d.accept, 0.5, 1e-15);
  std::mt19937_64 rng(7);
  int accepted = 0;
  for (int t = 0; t < 400; ++t) {
    const RejectionResult r = measure_rejection(c, out, rng);
    if (r.accepted) {
      ++accepted;
      ASSERT_TRUE(r.state.has_value());
      ASSERT_NEAR(fidelity(*r.state, codeword(c, amps)), 1.0, 1e-12);
    } else {
      ASSERT_FALSE(r.state.has_value());
    }
  }
  EXPECT_GT(accepted, 150);
  EXPECT_LT(accepted, 250);
}

TEST(CorrectionCode, ThreeModeSingleSpillTable) {
  const CorrectionCode c = build_correction_code(3, 1);
  EXPECT_EQ(c.modes, (std::vector<int>{1, 4, 7}));
  EXPECT_EQ(c.spacing, 3);
  ASSERT_EQ(c.syndromes().size(), 3u);
  EXPECT_EQ(Syndrome{0}.label(), "c_M");
  EXPECT_EQ(Syndrome{1}.label(), "c_+1");
  EXPECT_EQ(Syndrome{-1}.label(), "c_-1");

  // c_+1 is undone by |1><2| + |4><5| + |7><8|
  ComplexMatrix plus = ComplexMatrix::Zero(9, 9);
  plus(1, 2) = plus(4, 5) = plus(7, 8) = 1.0;
  EXPECT_EQ(c.corrections.at(1), plus);
  ComplexMatrix minus = ComplexMatrix::Zero(9, 9);
  minus(1, 0) = minus(4, 3) = minus(7, 6) = 1.0;
  EXPECT_EQ(c.corrections.at(-1), minus);

  ComplexMatrix pm = ComplexMatrix::Zero(9, 9);
  pm(1, 1) = pm(4, 4) = pm(7, 7) = 1.0;
  EXPECT_EQ(c.projectors.at(0), pm);
}

TEST(CorrectionCode, TwoModeDoubleSpill) {
  const CorrectionCode c = build_correction_code(2, 2);
  EXPECT_EQ(c.modes, (std::vector<int>{2, 7}));
  std::vector<std::string> labels;
  for (const auto& s : c.syndromes()) labels.push_back(s.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"c_-2", "c_-1", "c_M", "c_+1", "c_+2"}));
}

TEST(CorrectionCode, ProjectorsMutuallyOrthogonal) {
  for (Index m = 2; m <= 5; ++m) {
    for (int l = 1; l <= 3; ++l) {
      const CorrectionCode c = build_correction_code(m, l);
      ComplexMatrix sum = ComplexMatrix::Zero(c.space.size(), c.space.size());
      for (const auto& [j, pj] : c.projectors) {
        sum += pj;
        for (const auto& [k, pk] : c.projectors) {
          if (j != k) ASSERT_LT((pj * pk).cwiseAbs().maxCoeff(), 1e-12);
        }
      }
      // the stabiliser subspaces tile the whole mode range
      EXPECT_LT(max_diff(sum, ComplexMatrix::Identity(c.space.size(), c.space.size())), 1e-15);
      EXPECT_EQ(c.space.size(), (m - 1) * (2 * l + 1) + 2 * l + 1);
    }
  }
}

TEST(Encode, LogicalBasisAndSuperposition) {
  const CorrectionCode c = build_correction_code(3, 1);
  const DensityMatrix ground = encode(c, logical({1.0, 0.0, 0.0}));
  EXPECT_EQ(ground(1, 1), Complex(1.0));
  EXPECT_NEAR(ground.matrix().cwiseAbs().sum(), 1.0, 1e-15);

  const Complex a{0.6, 0.0}, b{0.0, 0.48}, g{0.64, 0.0};
  const ComplexVector psi = codeword(c, logical({a, b, g}));
  ComplexVector expected = ComplexVector::Zero(9);
  expected(1) = a;
  expected(4) = b;
  expected(7) = g;
  EXPECT_EQ(psi, expected);
}

TEST(Encode, RejectsBadAmplitudes) {
  const CorrectionCode c = build_correction_code(3, 1);
  try {
    encode(c, logical({1.0, 1.0, 0.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
  }
  EXPECT_THROW(encode(c, logical({1.0, 0.0})), Error);
}

TEST(MeasureSyndrome, CleanCodewordGivesCm) {
  const CorrectionCode c = build_correction_code(3, 1);
  const auto dist = syndrome_distribution(c, encode(c, logical({0.6, 0.8, 0.0})));
  for (const auto& o : dist) EXPECT_NEAR(o.probability, o.syndrome.shift == 0 ? 1.0 : 0.0, 1e-15);
}

TEST(MeasureSyndrome, ChannelMixtureDistribution) {
  const CorrectionCode c = build_correction_code(3, 1);
  const ComplexVector amps = logical({0.6, Complex(0.0, 0.48), 0.64});
  const DensityMatrix out = through_channel(c.modes, {{0.5, 0.25}}, encode(c, amps));
  double total = 0.0;
  for (const auto& o : syndrome_distribution(c, out)) {
    EXPECT_NEAR(o.probability, o.syndrome.shift == 0 ? 0.5 : 0.25, 1e-15);
    total += o.probability;
    ASSERT_TRUE(o.state.has_value());
    EXPECT_NEAR(fidelity(correct(c, o.syndrome, *o.state), codeword(c, amps)), 1.0, 1e-12);
  }
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(MeasureSyndrome, SamplingIsSeededAndDeterministic) {
  const CorrectionCode c = build_correction_code(3, 1);
  const DensityMatrix out =
      through_channel(c.modes, {{0.5, 0.25}}, encode(c, logical({0.6, 0.0, 0.8})));
  std::mt19937_64 r1(99), r2(99);
  std::map<int, int> counts;
  for (int t = 0; t < 400; ++t) {
    const SyndromeOutcome a = measure_syndrome(c, out, r1);
    const SyndromeOutcome b = measure_syndrome(c, out, r2);
    ASSERT_EQ(a.syndrome, b.syndrome);
    ++counts[a.syndrome.shift];
  }
  EXPECT_GT(counts[0], 150);
  EXPECT_GT(counts[1], 60);
  EXPECT_GT(counts[-1], 60);
}

TEST(MeasureSyndrome, StateOffTheCodeRangeIsRejected) {
  const CorrectionCode c = build_correction_code(2, 1);
  testing::Rng rng(51);
  const DensityMatrix wrong = testing::random_state(rng, ModeBasis::indices(3));
  EXPECT_THROW(syndrome_distribution(c, wrong), Error);
}

TEST(Correct, TableRowAndIdentity) {
  const CorrectionCode c = build_correction_code(3, 1);
  const ComplexVector psi = codeword(c, logical({0.6, Complex(0.0, 0.48), 0.64}));
  const DensityMatrix clean = pure_density(psi, c.space);
  EXPECT_NEAR(fidelity(correct(c, Syndrome{1}, corrupt(c.space, psi, 1)), psi), 1.0, 1e-15);
  EXPECT_EQ(correct(c, Syndrome{0}, clean).matrix(), clean.matrix());
  try {
    correct(c, Syndrome{2}, clean);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSyndrome);
  }
}

TEST(Correct, EverySyndromeForDoubleSpill) {
  const CorrectionCode c = build_correction_code(3, 2);
  testing::Rng rng(52);
  const ComplexVector psi = codeword(c, testing::random_unit_vector(rng, 3));
  for (const auto& s : c.syndromes()) {
    const DensityMatrix bad = corrupt(c.space, psi, s.shift);
    const auto dist = syndrome_distribution(c, bad);
    for (const auto& o : dist) {
      ASSERT_NEAR(o.probability, o.syndrome == s ? 1.0 : 0.0, 1e-12);
      if (o.syndrome == s) ASSERT_NEAR(fidelity(correct(c, s, *o.state), psi), 1.0, 1e-12);
    }
  }
}

// End-to-end over every code size and error.
TEST(CodeProperties, SingleErrorsCorrected) {
  testing::Rng rng(53);
  for (Index m = 2; m <= 5; ++m) {
    for (int l = 1; l <= 3; ++l) {
      const CorrectionCode c = build_correction_code(m, l);
      const RejectionCode r = build_rejection_code(m, l);
      for (int t = 0; t < 50; ++t) {
        const ComplexVector amps = testing::random_unit_vector(rng, m);
        const ComplexVector psi = codeword(c, amps);
        const ComplexVector psi_r = codeword(r, amps);
        ASSERT_NEAR(rejection_distribution(r, encode(r, amps)).accept, 1.0, 1e-12);
        for (int k = -l; k <= l; ++k) {
          if (k == 0) continue;
          bool identified = false;
          for (const auto& o : syndrome_distribution(c, corrupt(c.space, psi, k))) {
            if (o.probability < 1e-12) continue;
            ASSERT_EQ(o.syndrome.shift, k);
            identified = true;
            ASSERT_GE(fidelity(correct(c, o.syndrome, *o.state), psi), 1.0 - 1e-12);
          }
          ASSERT_TRUE(identified);
          const DensityMatrix bad = corrupt(r.space, psi_r, k);
          ASSERT_LT(std::abs(expectation(bad, r.code_projector)), 1e-12);
        }
      }
    }
  }
}

TEST(CodeProperties, ChannelMixtureAlwaysRecovered) {
  testing::Rng rng(54);
  for (Index m = 2; m <= 5; ++m) {
    for (int l = 1; l <= 3; ++l) {
      const CorrectionCode c = build_correction_code(m, l);
      const ComplexVector amps = testing::random_unit_vector(rng, m);
      const DensityMatrix out =
          through_channel(c.modes, testing::random_spec(rng, l), encode(c, amps));
      for (const auto& o : syndrome_distribution(c, out)) {
        if (!o.state) continue;
        ASSERT_GE(fidelity(correct(c, o.syndrome, *o.state), codeword(c, amps)), 1.0 - 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace oamic::codes
