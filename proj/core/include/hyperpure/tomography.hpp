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

// Two-qubit state tomography: exact Pauli expectations, seeded finite-shot
// sampling, linear-inversion reconstruction with PSD repair, Monte Carlo
// error bars, and the mode-swap circuit that exposes the spatial qubit to
// the standard polarization tomography stage.

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "hyperpure/optics.hpp"
#include "hyperpure/qstate.hpp"

namespace hyperpure {

enum class PauliOp { I, X, Y, Z };

const char* to_string(PauliOp op);

/// Local measurement setting, one Pauli per photon.
struct BasisPair {
  PauliOp a = PauliOp::Z;
  PauliOp b = PauliOp::Z;
};

/// <sigma_i (x) sigma_j> for i,j in (I,X,Y,Z), row-major (index i*4+j).
/// The (I,I) entry is always 1.
std::array<double, 16> pauli_expectations(const DensityMatrix& rho);

/// Outcome probabilities for the four eigenvalue pairs (++, +-, -+, --) of a
/// non-identity basis pair; this is the infinite-shot limit of sample_counts.
std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, const BasisPair& basis);

struct MeasurementRecord {
  BasisPair basis;
  std::array<std::uint64_t, 4> counts{};  // (++, +-, -+, --)
  std::uint64_t shots = 0;

  double joint_expectation() const;
  double marginal_a() const;
  double marginal_b() const;
};

/// Multinomial draw from the basis outcome probabilities; bit-reproducible
/// for a given seed. Requires shots >= 1 and a non-identity basis pair.
MeasurementRecord sample_counts(const DensityMatrix& rho, const BasisPair& basis,
                                std::uint64_t shots, std::uint64_t seed);

/// Full sampled tomography session: the nine non-identity settings receive
/// `shots_per_setting` each; single-qubit expectations are averaged over the
/// three settings that contain them.
std::array<double, 16> sampled_expectations(const DensityMatrix& rho,
                                            std::uint64_t shots_per_setting, std::uint64_t seed);

enum class ReconstructionMethod { LinearInversion, Projected };

const char* to_string(ReconstructionMethod m);

struct Reconstruction {
  DensityMatrix rho;
  ReconstructionMethod method = ReconstructionMethod::LinearInversion;
  double fidelity_vs_target = 0.0;
  double error_bar = 0.0;  // filled by Monte Carlo callers; 0 in exact mode
};

/// rho = (1/4) sum <sigma_i sigma_j> sigma_i (x) sigma_j. Requires the (I,I)
/// entry to be 1 within 1e-9. When the inversion is not PSD the eigenvalues
/// are clipped at zero and the matrix renormalized (method = Projected).
/// The reported fidelity is taken against `target` (phi+ by default).
Reconstruction reconstruct(const std::array<double, 16>& expectations,
                           const std::optional<PureState>& target = std::nullopt);

/// Monte Carlo standard deviation of the reconstructed fidelity over `trials`
/// independently seeded sampling sessions. shots == 0 selects exact mode,
/// which returns 0. Requires trials >= 2.
double error_bar(const DensityMatrix& rho, const PureState& target, std::uint64_t shots,
                 int trials, std::uint64_t seed);

/// Mode-swap circuit (per photon [PBS, HWP 45 deg on rail 2, PBS]) that moves
/// the spatial qubit into the polarization slot so the standard polarization
/// tomography measures it. Applying it twice is the identity.
Circuit spatial_measurement_map();

}  // namespace hyperpure
