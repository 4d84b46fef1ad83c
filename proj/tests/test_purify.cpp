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

#include "hyperpure/purify.hpp"

#include <gtest/gtest.h>

#include "support/matchers.hpp"
#include "support/oracles.hpp"
#include "support/random_states.hpp"

namespace hyperpure {
namespace {

using testing::max_abs_diff;
using testing::random_bell_diagonal;
using testing::random_density;
using testing::TestRng;

DensityMatrix ideal_spatial() { return DensityMatrix::pure(bell_state(BellKind::PhiPlus)); }

oracle::Mat to_oracle(const ComplexMatrix& m) {
  oracle::Mat out = oracle::zeros(static_cast<int>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Live rails in pattern order D2D4, D5D7, D2D7, D4D5.
constexpr int kPatternRails[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};

TEST(Purify, WhiteNoiseBecomesPerfectDeterministically) {
  const BellDiagonal white07(0.3, 0.7 / 3, 0.7 / 3, 0.7 / 3);
  const PurifyReport report =
      purify(HyperState::product(bell_diagonal_to_density(white07), ideal_spatial()), "fig2c");
  EXPECT_NEAR(report.total_success_prob, 1.0, 1e-10);
  for (const auto& f : report.per_pattern_fidelity) {
    ASSERT_TRUE(f.has_value());
    EXPECT_NEAR(*f, 1.0, 1e-10);
  }
  EXPECT_NEAR(report.aggregate_fidelity, 1.0, 1e-10);
}

TEST(Purify, NoiselessPassthrough) {
  const PurifyReport report = purify(
      HyperState::product(DensityMatrix::pure(bell_state(BellKind::PhiPlus)), ideal_spatial()),
      "fig2c");
  EXPECT_NEAR(report.total_success_prob, 1.0, 1e-10);
  EXPECT_NEAR(report.aggregate_fidelity, 1.0, 1e-10);
  // The psi-routed patterns never fire on a pure phi+ input: the conditional
  // is reported absent, not zero.
  EXPECT_TRUE(report.per_pattern_fidelity[0].has_value());
  EXPECT_TRUE(report.per_pattern_fidelity[1].has_value());
  EXPECT_FALSE(report.per_pattern_fidelity[2].has_value());
  EXPECT_FALSE(report.per_pattern_fidelity[3].has_value());
}

TEST(Purify, HeavyBitFlipStillPerfect) {
  const PurifyReport report = purify(
      HyperState::product(bell_diagonal_to_density(BellDiagonal(0.3, 0, 0.7, 0)),
                          ideal_spatial()),
      "fig2c");
  for (const auto& f : report.per_pattern_fidelity) {
    ASSERT_TRUE(f.has_value());
    EXPECT_NEAR(*f, 1.0, 1e-10);
  }
  EXPECT_NEAR(report.total_success_prob, 1.0, 1e-10);
}

TEST(Purify, WorksBelowTheRecurrenceThreshold) {
  // f1 < 1/2 defeats two-copy recurrence; the one-step protocol does not care.
  const PurifyReport report = purify(
      HyperState::product(bell_diagonal_to_density(BellDiagonal(0.1, 0.2, 0.5, 0.2)),
                          ideal_spatial()),
      "fig2c");
  EXPECT_NEAR(report.total_success_prob, 1.0, 1e-10);
  EXPECT_NEAR(report.aggregate_fidelity, 1.0, 1e-10);
}

TEST(Purify, Fig1NeedsAndGetsTheConditionalCorrection) {
  const DensityMatrix psi = DensityMatrix::pure(bell_state(BellKind::PsiMinus));
  const HyperState state = HyperState::product(psi, ideal_spatial());

  // Raw circuit output on the anti-correlated patterns is psi+.
  const auto raw = coincidences(state, purification_circuit(CircuitPreset::Fig1));
  for (const auto& o : raw) {
    if (o.pattern.name() == "D2D7") {
      ASSERT_TRUE(o.conditional_pol.has_value());
      EXPECT_NEAR(fidelity(*o.conditional_pol, bell_state(BellKind::PsiPlus)), 1.0, 1e-12);
    }
  }

  // purify() applies the bit flip and reports phi+.
  const PurifyReport report = purify(state, "fig1");
  EXPECT_NEAR(report.aggregate_fidelity, 1.0, 1e-10);
  ASSERT_TRUE(report.per_pattern_fidelity[2].has_value());
  EXPECT_NEAR(*report.per_pattern_fidelity[2], 1.0, 1e-12);
}

TEST(Purify, PatternRoutingPerBellComponent) {
  const std::array<std::array<int, 2>, 4> routed = {{{0, 1}, {0, 1}, {2, 3}, {2, 3}}};
  for (CircuitPreset preset : {CircuitPreset::Fig1, CircuitPreset::Fig2c}) {
    for (int k = 0; k < 4; ++k) {
      const PurifyReport report = purify(
          HyperState::product(DensityMatrix::pure(bell_state(kBellKinds[k])), ideal_spatial()),
          preset);
      double routed_mass = 0.0;
      for (int idx : routed[k]) routed_mass += report.outcomes[idx].probability;
      EXPECT_NEAR(routed_mass, 1.0, 1e-12) << to_string(preset) << " " << k;
    }
  }
}

TEST(Purify, LinearInBellComponents) {
  TestRng rng(2024);
  const BellDiagonal w = random_bell_diagonal(rng);
  const DensityMatrix spat = random_density(4, rng);

  const PurifyReport mixed =
      purify(HyperState::product(bell_diagonal_to_density(w), spat), "fig2c");
  for (int idx = 0; idx < 4; ++idx) {
    double prob = 0.0;
    ComplexMatrix unnormalized = ComplexMatrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
      const PurifyReport component = purify(
          HyperState::product(DensityMatrix::pure(bell_state(kBellKinds[k])), spat), "fig2c");
      prob += w.weights()[k] * component.outcomes[idx].probability;
      if (component.outcomes[idx].conditional_pol) {
        unnormalized += w.weights()[k] * component.outcomes[idx].probability *
                        component.outcomes[idx].conditional_pol->matrix();
      }
    }
    EXPECT_NEAR(mixed.outcomes[idx].probability, prob, 1e-12);
    if (mixed.outcomes[idx].conditional_pol) {
      EXPECT_LT(max_abs_diff(mixed.outcomes[idx].probability *
                                 mixed.outcomes[idx].conditional_pol->matrix(),
                             unnormalized),
                1e-12);
    }
  }
}

TEST(Purify, UnknownPresetRejected) {
  EXPECT_THROW(purify(HyperState::product(ideal_spatial(), ideal_spatial()), "fig9"),
               std::invalid_argument);
}

TEST(ImperfectSpatial, IdealSpatialReducesToPurify) {
  TestRng rng(606);
  const BellDiagonal w = random_bell_diagonal(rng);
  const PurifyReport a = purify_with_imperfect_spatial(w, ideal_spatial(), "fig2c");
  const PurifyReport b =
      purify(HyperState::product(bell_diagonal_to_density(w), ideal_spatial()), "fig2c");
  EXPECT_NEAR(a.total_success_prob, b.total_success_prob, 1e-12);
  EXPECT_NEAR(a.aggregate_fidelity, b.aggregate_fidelity, 1e-12);
}

TEST(ImperfectSpatial, RealisticSpatialFidelityBoundsOutput) {
  const PurifyReport report = purify_with_imperfect_spatial(
      BellDiagonal(0.3, 0.7 / 3, 0.7 / 3, 0.7 / 3), spatial_state_from_fidelity(0.990), "fig2c");
  EXPECT_LT(report.aggregate_fidelity, 1.0);
  EXPECT_GT(report.aggregate_fidelity, 0.95);
  // Cross-check one pattern against the brute-force projection.
  const HyperState state = HyperState::product(
      bell_diagonal_to_density(BellDiagonal(0.3, 0.7 / 3, 0.7 / 3, 0.7 / 3)),
      spatial_state_from_fidelity(0.990));
  const auto proj = oracle::project_pattern(to_oracle(state.full().matrix()),
                                            oracle::side_map_fig2c(), oracle::side_map_fig2c(),
                                            0, 0);
  EXPECT_NEAR(report.outcomes[0].probability, proj.probability, 1e-12);
}

TEST(ImperfectSpatial, FullyMixedSpatialDestroysTheResource) {
  TestRng rng(77);
  const PurifyReport report = purify_with_imperfect_spatial(
      random_bell_diagonal(rng), DensityMatrix::maximally_mixed(4), "fig2c");
  EXPECT_LE(report.aggregate_fidelity, 0.5 + 1e-12);
}

TEST(Sweep, IdealLimits) {
  const auto rows = sweep(NoiseKind::BitFlip, {0.3, 0.5, 0.7}, 1.0);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].before_pol, 0.7, 1e-12);
  EXPECT_NEAR(rows[1].before_pol, 0.5, 1e-12);
  EXPECT_NEAR(rows[2].before_pol, 0.3, 1e-12);
  for (const auto& row : rows) {
    EXPECT_NEAR(row.before_path, 1.0, 1e-12);
    EXPECT_NEAR(row.success, 1.0, 1e-10);
    for (const auto& f : row.after) {
      ASSERT_TRUE(f.has_value());
      EXPECT_NEAR(*f, 1.0, 1e-10);
    }
  }

  const auto white = sweep(NoiseKind::White, {0.7, 0.2}, 1.0);
  EXPECT_NEAR(white[0].before_pol, 0.3, 1e-12);
  EXPECT_NEAR(white[1].before_pol, 0.8, 1e-12);
  for (const auto& f : white[1].after) {
    ASSERT_TRUE(f.has_value());
    EXPECT_NEAR(*f, 1.0, 1e-10);  // 20% white noise is fixed in a single step
  }
}

TEST(Sweep, RejectsBadFractions) {
  EXPECT_THROW(sweep(NoiseKind::White, {1.2}, 1.0), std::invalid_argument);
}

TEST(OracleEquivalence, ProductionMatchesBruteForceOnRandomInputs) {
  TestRng rng(890);
  for (int trial = 0; trial < 30; ++trial) {
    // Half product states, half fully general 16-dim states.
    const HyperState state =
        (trial % 2 == 0)
            ? HyperState::product(random_density(4, rng), random_density(4, rng))
            : HyperState::from_full(random_density(16, rng));
    for (CircuitPreset preset : {CircuitPreset::Fig1, CircuitPreset::Fig2c}) {
      const oracle::Mat side = preset == CircuitPreset::Fig2c ? oracle::side_map_fig2c()
                                                              : oracle::side_map_fig1();
      const auto outcomes = coincidences(state, purification_circuit(preset));
      const oracle::Mat raw = to_oracle(state.full().matrix());
      for (int idx = 0; idx < 4; ++idx) {
        const auto proj = oracle::project_pattern(raw, side, side, kPatternRails[idx][0],
                                                  kPatternRails[idx][1]);
        const CoincidenceOutcome* found = nullptr;
        for (const auto& o : outcomes) {
          if (o.pattern == accepted_patterns()[idx]) found = &o;
        }
        ASSERT_NE(found, nullptr);
        EXPECT_NEAR(found->probability, proj.probability, 1e-10);
        if (found->conditional_pol && !proj.conditional_pol.empty()) {
          for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
              EXPECT_LT(std::abs(found->conditional_pol->matrix()(r, c) -
                                 proj.conditional_pol[r][c]),
                        1e-10);
        }
      }
    }
  }
}

}  // namespace
}  // namespace hyperpure
