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

// Single-photon linear-optical elements (HWP, QWP, LC, PBS) over the
// spatial (X) polarization mode space, circuit composition, and coincidence
// projection onto detector-mode pairs.
//
// Port conventions (these fix every matrix in the module):
//   * PBS: transmits H keeping the rail index, reflects V swapping it:
//       a1 H -> out1 H,  a2 H -> out2 H,  a1 V -> out2 V,  a2 V -> out1 V.
//   * Wave plates and LC cells act on polarization within a rail; they can be
//     placed on rail 1, rail 2 or both rails.
//
// Detector layout. Each photon ends in two output rails, each still carrying
// its polarization qubit; every rail feeds an analyzing PBS whose two ports
// hold one detector each. Labels follow the beam order in which the setup is
// drawn, interleaving the two photons:
//
//     photon A:  rail 1 -> (D1, D2)   rail 2 -> (D5, D6)
//     photon B:  rail 1 -> (D3, D4)   rail 2 -> (D7, D8)
//
// A coincidence pattern is named by the transmitted-port detector of each
// photon's occupied rail, so the four live patterns are D2D4, D5D7, D2D7 and
// D4D5. The reflected-port labels (D1, D6, D3, D8) never fire in the lossless
// model but complete the 4x4 pattern grid. The conditional polarization state
// reported for a pattern is the two-qubit state remaining in the pair of
// occupied rails, i.e. the state the downstream tomography stage would see.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperpure/qstate.hpp"

namespace hyperpure {

enum class Photon { A, B };

// Rail placement for polarization elements.
enum class Rail { Both, One, Two };

enum class LcVoltage { V0, Vpi };

/// One linear element: a 4x4 single-photon map acting on a chosen photon.
struct OpticalElement {
  std::string name;
  ComplexMatrix map;  // 4x4, unitary for every element constructed here
  Photon acts_on = Photon::A;
};

/// Ordered element list; each element acts on the photon it names.
struct Circuit {
  std::string name;
  std::vector<OpticalElement> elements;
};

// 2x2 Jones matrices (polarization only).
ComplexMatrix jones_hwp(double theta_deg);
ComplexMatrix jones_qwp(double theta_deg);
ComplexMatrix jones_lc(LcVoltage v);

// Element factories. Wave plates default to acting on both rails.
OpticalElement hwp(double theta_deg, Photon photon, Rail rail = Rail::Both);
OpticalElement qwp(double theta_deg, Photon photon, Rail rail = Rail::Both);
OpticalElement lc_phase(LcVoltage v, Photon photon, Rail rail = Rail::Both);
OpticalElement pbs(Photon photon);

/// Ordered product of the elements acting on `photon` (identity if none).
ComplexMatrix compose(const Circuit& circuit, Photon photon);

// Named purification circuits.
//
// "fig2c": per photon [PBS, HWP 45 deg on inter-PBS rail 2, PBS], with the
// 45 deg half-wave plates of both photons on the same rail. The chain swaps
// the spatial and polarization qubits, so the clean spatial Bell state ends
// up in polarization and every accepted pattern carries phi+ directly.
//
// "fig1": per photon [HWP 45 deg on rail 2, PBS]. Phase errors are erased by
// the pattern measurement but the bit value stays in polarization, so the
// anti-correlated patterns deliver psi+ and need a conditional bit flip.
enum class CircuitPreset { Fig1, Fig2c };

Circuit purification_circuit(CircuitPreset preset);
CircuitPreset preset_by_name(const std::string& name);  // "fig1" | "fig2c"
const char* to_string(CircuitPreset preset);

enum class Detector { D1, D2, D3, D4, D5, D6, D7, D8 };

const char* to_string(Detector d);
Photon detector_side(Detector d);

/// Pair of detector labels, one on each photon's side.
struct DetectorPattern {
  Detector on_a;
  Detector on_b;

  std::string name() const;
  bool operator==(const DetectorPattern&) const = default;
};

/// Detector modes of one side, in layout order (rail1 reflected, rail1
/// transmitted, rail2 transmitted, rail2 reflected).
std::array<Detector, 4> detector_modes(Photon photon);

/// The four patterns kept by the purification protocol:
/// D2D4, D5D7, D2D7, D4D5.
const std::array<DetectorPattern, 4>& accepted_patterns();

/// 8x4 isometry taking the single-photon space into (detector mode) x (pol);
/// satisfies V+ V = I. Rows are ordered mode-major over detector_modes().
ComplexMatrix detector_isometry(Photon photon);

struct CoincidenceOutcome {
  DetectorPattern pattern;
  double probability = 0.0;
  // Normalized polarization state of the detected pair; absent when the
  // pattern probability is below 1e-14 (the conditional is undefined).
  std::optional<DensityMatrix> conditional_pol;
};

/// Propagates the state through the per-photon maps and projects onto every
/// detector-mode pair. Probabilities over all 16 patterns sum to 1.
std::vector<CoincidenceOutcome> coincidences(const HyperState& state, const Circuit& circuit);

/// (U_A (x) U_B) rho (U_A (x) U_B)+ computed by per-photon index contraction,
/// without forming the 16x16 product matrix.
ComplexMatrix apply_local_maps(const ComplexMatrix& rho16, const ComplexMatrix& map_a,
                               const ComplexMatrix& map_b);

}  // namespace hyperpure
