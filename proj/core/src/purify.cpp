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

#include <stdexcept>

#include "hyperpure/errors.hpp"

namespace hyperpure {

namespace {

// In the "fig1" variant the anti-correlated patterns (D2D7, D4D5) deliver
// psi+ and are converted to phi+ by a bit flip on photon B.
bool needs_fig1_correction(const DetectorPattern& pattern) {
  return pattern == accepted_patterns()[2] || pattern == accepted_patterns()[3];
}

DensityMatrix flip_photon_b(const DensityMatrix& pol) {
  ComplexMatrix x = ComplexMatrix::Zero(4, 4);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  x(2, 3) = 1.0;
  x(3, 2) = 1.0;
  return DensityMatrix(x * pol.matrix() * x.adjoint());
}

}  // namespace

PurifyReport purify(const HyperState& state, CircuitPreset preset) {
  const Circuit circuit = purification_circuit(preset);
  const std::vector<CoincidenceOutcome> all = coincidences(state, circuit);
  const PureState target = bell_state(BellKind::PhiPlus);

  PurifyReport report;
  double fidelity_mass = 0.0;
  for (size_t i = 0; i < accepted_patterns().size(); ++i) {
    const DetectorPattern& pattern = accepted_patterns()[i];
    const CoincidenceOutcome* found = nullptr;
    for (const CoincidenceOutcome& o : all) {
      if (o.pattern == pattern) {
        found = &o;
        break;
      }
    }
    CoincidenceOutcome outcome = *found;
    if (outcome.conditional_pol && preset == CircuitPreset::Fig1 &&
        needs_fig1_correction(pattern)) {
      outcome.conditional_pol = flip_photon_b(*outcome.conditional_pol);
    }
    report.total_success_prob += outcome.probability;
    if (outcome.conditional_pol) {
      const double f = fidelity(*outcome.conditional_pol, target);
      report.per_pattern_fidelity[i] = f;
      fidelity_mass += outcome.probability * f;
    }
    report.outcomes.push_back(std::move(outcome));
  }
  report.aggregate_fidelity =
      report.total_success_prob > 0.0 ? fidelity_mass / report.total_success_prob : 0.0;
  return report;
}

PurifyReport purify(const HyperState& state, const std::string& circuit_preset) {
  return purify(state, preset_by_name(circuit_preset));
}

PurifyReport purify_with_imperfect_spatial(const BellDiagonal& pol, const DensityMatrix& spat,
                                           const std::string& circuit_preset) {
  if (spat.dim() != 4) {
    throw std::invalid_argument("purify_with_imperfect_spatial: spatial state must be 4-dim");
  }
  const HyperState state = HyperState::product(bell_diagonal_to_density(pol), spat);
  return purify(state, circuit_preset);
}

DensityMatrix spatial_state_from_fidelity(double f) {
  if (f < 0.0 || f > 1.0) {
    throw std::invalid_argument("spatial_state_from_fidelity: fidelity out of [0,1]");
  }
  const double r = (1.0 - f) / 3.0;
  return bell_diagonal_to_density(BellDiagonal(f, r, r, r));
}

const char* to_string(NoiseKind kind) {
  return kind == NoiseKind::BitFlip ? "bf" : "white";
}

std::vector<SweepRow> sweep(NoiseKind noise_kind, const std::vector<double>& p_values,
                            double spatial_fidelity, CircuitPreset preset) {
  const DensityMatrix spat = spatial_state_from_fidelity(spatial_fidelity);
  const PureState phi_plus = bell_state(BellKind::PhiPlus);

  std::vector<SweepRow> rows;
  rows.reserve(p_values.size());
  for (double p : p_values) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sweep: noise fraction out of [0,1]");
    const PauliChannel ch =
        (noise_kind == NoiseKind::BitFlip) ? bf_channel(p) : white_channel(p);
    const BellDiagonal noisy = apply_to_bell_diagonal(BellDiagonal(1, 0, 0, 0), ch);

    SweepRow row;
    row.noise = noise_kind;
    row.p = p;
    row.before_pol = fidelity(bell_diagonal_to_density(noisy), phi_plus);
    row.before_path = fidelity(spat, phi_plus);
    const PurifyReport report =
        purify(HyperState::product(bell_diagonal_to_density(noisy), spat), preset);
    row.after = report.per_pattern_fidelity;
    row.success = report.total_success_prob;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hyperpure
