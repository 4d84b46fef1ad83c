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

// One-step purification pipeline: noisy hyperentangled pair in, post-selected
// polarization states and success statistics per accepted coincidence pattern
// out. Works for any input weights, including polarization fidelity below
// one half.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperpure/noise.hpp"
#include "hyperpure/optics.hpp"
#include "hyperpure/qstate.hpp"

namespace hyperpure {

struct PurifyReport {
  // Accepted-pattern outcomes in the order of accepted_patterns():
  // D2D4, D5D7, D2D7, D4D5. For the "fig1" preset the conditional states
  // already include the pattern-conditional bit-flip correction.
  std::vector<CoincidenceOutcome> outcomes;
  double total_success_prob = 0.0;
  // Fidelity vs phi+ per accepted pattern; absent when the pattern carries
  // probability below 1e-14.
  std::array<std::optional<double>, 4> per_pattern_fidelity;
  // Success-probability-weighted mean over the patterns that fired.
  double aggregate_fidelity = 0.0;
};

/// Runs the coincidence pipeline with the named preset ("fig1" or "fig2c")
/// and post-selects the accepted patterns. Unknown presets throw.
PurifyReport purify(const HyperState& state, const std::string& circuit_preset);
PurifyReport purify(const HyperState& state, CircuitPreset preset);

/// Same pipeline on bell_diagonal_to_density(pol) (x) spat.
PurifyReport purify_with_imperfect_spatial(const BellDiagonal& pol, const DensityMatrix& spat,
                                           const std::string& circuit_preset);

/// Bell-diagonal spatial state with weight `f` on phi+ and the remainder
/// spread evenly over the other three Bell states.
DensityMatrix spatial_state_from_fidelity(double f);

enum class NoiseKind { BitFlip, White };

const char* to_string(NoiseKind kind);

struct SweepRow {
  NoiseKind noise;
  double p = 0.0;
  double before_pol = 0.0;
  double before_path = 0.0;
  std::array<std::optional<double>, 4> after;  // D2D4, D5D7, D2D7, D4D5
  double success = 0.0;
};

/// Before/after fidelities for each noise fraction in `p_values`, using the
/// given spatial-mode fidelity (1.0 = ideal spatial Bell state).
std::vector<SweepRow> sweep(NoiseKind noise_kind, const std::vector<double>& p_values,
                            double spatial_fidelity,
                            CircuitPreset preset = CircuitPreset::Fig2c);

}  // namespace hyperpure
