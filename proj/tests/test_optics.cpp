// Copyright 2026 The hyperpure Authors
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

#include "hyperpure/optics.hpp"

#include <gtest/gtest.h>

#include "hyperpure/errors.hpp"
#include "support/matchers.hpp"
#include "support/oracles.hpp"
#include "support/random_states.hpp"

namespace hyperpure {
namespace {

using testing::max_abs_diff;
using testing::max_abs_diff_up_to_phase;
using testing::random_bell_diagonal;
using testing::random_density;
using testing::TestRng;

constexpr double kInvSqrt2 = 0.70710678118654752440;

ComplexMatrix oracle_to_eigen(const oracle::Mat& m) {
  ComplexMatrix out(m.size(), m[0].size());
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[r].size(); ++c) out(r, c) = m[r][c];
  return out;
}

TEST(Hwp, FortyFiveFlipsPolarization) {
  const ComplexMatrix m = hwp(45.0, Photon::A).map;
  // a1H -> a1V on rail 1 and likewise on rail 2.
  ComplexVector h = ComplexVector::Zero(4);
  h(0) = 1.0;
  const ComplexVector out = m * h;
  EXPECT_NEAR(std::abs(out(1)), 1.0, 1e-12);
}

TEST(Hwp, TwentyTwoPointFiveMakesDiagonal) {
  const ComplexMatrix j = jones_hwp(22.5);
  // |H> -> (|H> + |V>)/sqrt(2)
  EXPECT_NEAR(j(0, 0).real(), kInvSqrt2, 1e-12);
  EXPECT_NEAR(j(1, 0).real(), kInvSqrt2, 1e-12);
}

TEST(Hwp, IsInvolutionAtAnyAngle) {
  TestRng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const double theta = 360.0 * rng.uniform() - 180.0;
    const ComplexMatrix m = hwp(theta, Photon::B).map;
    EXPECT_LT(max_abs_diff(m * m, ComplexMatrix::Identity(4, 4)), 1e-12) << theta;
  }
}

TEST(Qwp, RetardsSlowAxis) {
  const ComplexMatrix j = jones_qwp(0.0);
  EXPECT_NEAR(std::abs(j(0, 0) - Complex(1, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(j(1, 1) - Complex(0, 1)), 0.0, 1e-12);
}

TEST(Qwp, FourthPowerIsIdentityUpToPhase) {
  TestRng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    const double theta = 360.0 * rng.uniform() - 180.0;
    const ComplexMatrix j = jones_qwp(theta);
    EXPECT_LT(max_abs_diff_up_to_phase(j * j * j * j, ComplexMatrix::Identity(2, 2)), 1e-12);
  }
}

TEST(Qwp, TwoQuartersMakeAHalfAtSameAngle) {
  // Product computed with the plain-loop oracle, not Eigen.
  const ComplexMatrix q = jones_qwp(45.0);
  oracle::Mat q_raw = oracle::zeros(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) q_raw[r][c] = q(r, c);
  const ComplexMatrix product = oracle_to_eigen(oracle::multiply(q_raw, q_raw));
  EXPECT_LT(max_abs_diff_up_to_phase(product, jones_hwp(45.0)), 1e-12);
}

TEST(Lc, PhaseConventions) {
  const ComplexMatrix vpi = jones_lc(LcVoltage::Vpi);
  ComplexVector diag(2);
  diag << kInvSqrt2, kInvSqrt2;
  const ComplexVector out = vpi * diag;
  EXPECT_NEAR(out(0).real(), kInvSqrt2, 1e-12);
  EXPECT_NEAR(out(1).real(), -kInvSqrt2, 1e-12);

  EXPECT_LT(max_abs_diff(jones_lc(LcVoltage::V0), ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(Lc, DutyCycleChainRealizesBitFlip) {
  // HWP(22.5) LC(Vpi) HWP(22.5) = sigma_x, and the same at -22.5 degrees.
  for (double angle : {22.5, -22.5}) {
    const ComplexMatrix chain =
        jones_hwp(angle) * jones_lc(LcVoltage::Vpi) * jones_hwp(angle);
    ComplexMatrix sigma_x = ComplexMatrix::Zero(2, 2);
    sigma_x(0, 1) = 1.0;
    sigma_x(1, 0) = 1.0;
    EXPECT_LT(max_abs_diff_up_to_phase(chain, sigma_x), 1e-12) << angle;
  }
}

TEST(Pbs, PortMapFollowsConvention) {
  const ComplexMatrix m = pbs(Photon::A).map;
  // a1H (index 0) -> out1H (index 0): transmitted rail keeps H.
  EXPECT_NEAR(std::abs(m(0, 0) - Complex(1, 0)), 0.0, 1e-15);
  // a1V (index 1) -> out2V (index 3): reflected rail carries V.
  EXPECT_NEAR(std::abs(m(3, 1) - Complex(1, 0)), 0.0, 1e-15);
  // Unitary.
  EXPECT_LT(max_abs_diff(m.adjoint() * m, ComplexMatrix::Identity(4, 4)), 1e-15);
}

TEST(Compose, EmptyCircuitIsIdentity) {
  const Circuit c{"empty", {}};
  EXPECT_LT(max_abs_diff(compose(c, Photon::A), ComplexMatrix::Identity(4, 4)), 1e-15);
}

TEST(Compose, DoubleHalfWaveCancels) {
  Circuit c{"hh", {hwp(45.0, Photon::A), hwp(45.0, Photon::A)}};
  EXPECT_LT(max_abs_diff(compose(c, Photon::A), ComplexMatrix::Identity(4, 4)), 1e-12);
  // Photon B untouched by A-side elements.
  EXPECT_LT(max_abs_diff(compose(c, Photon::B), ComplexMatrix::Identity(4, 4)), 1e-15);
}

TEST(Compose, PurificationCircuitMatchesHandAssembledMap) {
  const Circuit fig2c = purification_circuit(CircuitPreset::Fig2c);
  const ComplexMatrix expected = oracle_to_eigen(oracle::side_map_fig2c());
  EXPECT_LT(max_abs_diff(compose(fig2c, Photon::A), expected), 1e-15);
  EXPECT_LT(max_abs_diff(compose(fig2c, Photon::B), expected), 1e-15);

  const Circuit fig1 = purification_circuit(CircuitPreset::Fig1);
  const ComplexMatrix expected1 = oracle_to_eigen(oracle::side_map_fig1());
  EXPECT_LT(max_abs_diff(compose(fig1, Photon::A), expected1), 1e-15);
}

TEST(Compose, UnitaryElementsComposeToUnitary) {
  TestRng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c{"random", {}};
    for (int k = 0; k < 6; ++k) {
      const double angle = 360.0 * rng.uniform() - 180.0;
      const Photon p = rng.uniform() < 0.5 ? Photon::A : Photon::B;
      switch (static_cast<int>(rng.uniform() * 4)) {
        case 0: c.elements.push_back(hwp(angle, p)); break;
        case 1: c.elements.push_back(qwp(angle, p, Rail::Two)); break;
        case 2: c.elements.push_back(lc_phase(LcVoltage::Vpi, p)); break;
        default: c.elements.push_back(pbs(p)); break;
      }
    }
    for (Photon p : {Photon::A, Photon::B}) {
      const ComplexMatrix u = compose(c, p);
      EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(4, 4)), 1e-12);
    }
  }
}

TEST(DetectorLayout, SidesAndIsometry) {
  for (Detector d : detector_modes(Photon::A)) EXPECT_EQ(detector_side(d), Photon::A);
  for (Detector d : detector_modes(Photon::B)) EXPECT_EQ(detector_side(d), Photon::B);

  for (Photon p : {Photon::A, Photon::B}) {
    const ComplexMatrix v = detector_isometry(p);
    EXPECT_LT(max_abs_diff(v.adjoint() * v, ComplexMatrix::Identity(4, 4)), 1e-15);
  }

  EXPECT_EQ(accepted_patterns()[0].name(), "D2D4");
  EXPECT_EQ(accepted_patterns()[1].name(), "D5D7");
  EXPECT_EQ(accepted_patterns()[2].name(), "D2D7");
  EXPECT_EQ(accepted_patterns()[3].name(), "D4D5");
}

TEST(Coincidences, IdealPairConcentratesOnCorrelatedPatterns) {
  const DensityMatrix phi = DensityMatrix::pure(bell_state(BellKind::PhiPlus));
  const auto outcomes = coincidences(HyperState::product(phi, phi),
                                     purification_circuit(CircuitPreset::Fig2c));
  ASSERT_EQ(outcomes.size(), 16u);

  double sum = 0.0;
  for (const auto& o : outcomes) {
    sum += o.probability;
    const std::string name = o.pattern.name();
    if (name == "D2D4" || name == "D5D7") {
      EXPECT_NEAR(o.probability, 0.5, 1e-12);
      ASSERT_TRUE(o.conditional_pol.has_value());
      EXPECT_NEAR(fidelity(*o.conditional_pol, bell_state(BellKind::PhiPlus)), 1.0, 1e-12);
    } else {
      EXPECT_LT(o.probability, 1e-12);
      EXPECT_FALSE(o.conditional_pol.has_value());
    }
  }
  EXPECT_NEAR(sum, 1.0, 1e-10);
}

TEST(Coincidences, BitFlippedPairRoutesToAntiCorrelatedPatterns) {
  const DensityMatrix psi = DensityMatrix::pure(bell_state(BellKind::PsiPlus));
  const DensityMatrix phi_s = DensityMatrix::pure(bell_state(BellKind::PhiPlus));
  const auto outcomes = coincidences(HyperState::product(psi, phi_s),
                                     purification_circuit(CircuitPreset::Fig2c));
  for (const auto& o : outcomes) {
    const std::string name = o.pattern.name();
    if (name == "D2D7" || name == "D4D5") {
      EXPECT_NEAR(o.probability, 0.5, 1e-12);
    } else {
      EXPECT_LT(o.probability, 1e-12);
    }
  }
}

TEST(Coincidences, ProbabilitiesSumToOneForArbitraryStates) {
  TestRng rng(4096);
  for (int trial = 0; trial < 20; ++trial) {
    const HyperState state = HyperState::from_full(random_density(16, rng));
    for (CircuitPreset preset : {CircuitPreset::Fig1, CircuitPreset::Fig2c}) {
      const auto outcomes = coincidences(state, purification_circuit(preset));
      double sum = 0.0;
      for (const auto& o : outcomes) sum += o.probability;
      EXPECT_NEAR(sum, 1.0, 1e-10);
    }
  }
}

TEST(Coincidences, BellDiagonalInputSucceedsOnAcceptedPatternsOnly) {
  TestRng rng(515);
  const DensityMatrix phi_s = DensityMatrix::pure(bell_state(BellKind::PhiPlus));
  for (int trial = 0; trial < 30; ++trial) {
    const HyperState state =
        HyperState::product(bell_diagonal_to_density(random_bell_diagonal(rng)), phi_s);
    const auto outcomes = coincidences(state, purification_circuit(CircuitPreset::Fig2c));
    double accepted_mass = 0.0;
    for (const auto& o : outcomes) {
      bool accepted = false;
      for (const auto& p : accepted_patterns()) accepted |= (o.pattern == p);
      if (accepted) {
        accepted_mass += o.probability;
        if (o.conditional_pol) {
          // Conditional states satisfy the density-matrix invariants; the
          // constructor has already validated them, spot-check the trace.
          EXPECT_NEAR(o.conditional_pol->matrix().trace().real(), 1.0, 1e-12);
        }
      } else {
        EXPECT_LT(o.probability, 1e-12);
      }
    }
    EXPECT_NEAR(accepted_mass, 1.0, 1e-10);
  }
}

TEST(PresetByName, ParsesAndRejects) {
  EXPECT_EQ(preset_by_name("fig1"), CircuitPreset::Fig1);
  EXPECT_EQ(preset_by_name("fig2c"), CircuitPreset::Fig2c);
  EXPECT_THROW(preset_by_name("fig3"), std::invalid_argument);
}

}  // namespace
}  // namespace hyperpure
