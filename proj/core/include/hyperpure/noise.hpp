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

// Pauli noise channels on the polarization pair, including the time-averaged
// duty-cycle construction used by the liquid-crystal noise loader. Noise is
// applied one-sided (photon B by default); for Bell-diagonal bookkeeping the
// side does not matter.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyperpure/optics.hpp"
#include "hyperpure/qstate.hpp"

namespace hyperpure {

/// Probabilities of applying I, sigma_x, sigma_y, sigma_z. Nonnegative,
/// sum 1 within 1e-12.
class PauliChannel {
 public:
  PauliChannel(double p_i, double p_x, double p_y, double p_z);

  double p_i() const { return p_[0]; }
  double p_x() const { return p_[1]; }
  double p_y() const { return p_[2]; }
  double p_z() const { return p_[3]; }
  const std::array<double, 4>& probabilities() const { return p_; }

 private:
  std::array<double, 4> p_;
};

/// Bit-flip channel: (1-p, p, 0, 0).
PauliChannel bf_channel(double p);

/// White-noise channel: (1-p, p/3, p/3, p/3).
PauliChannel white_channel(double p);

/// Durations (seconds) the LC pair spends realizing I, sigma_x, sigma_y,
/// sigma_z within one cycle. Nonnegative with at least one positive entry.
struct LcSchedule {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
};

/// Time-averaged channel over one duty cycle: (t1..t4)/sum.
PauliChannel schedule_to_channel(const LcSchedule& s);

/// Applies the channel to one photon of a 4-dim polarization state:
/// sum_k p_k (sigma_k on `side`) rho (...)+.
DensityMatrix apply_channel(const DensityMatrix& rho, const PauliChannel& ch,
                            Photon side = Photon::B);

/// Same channel tracked directly on Bell-diagonal weights. One-sided Paulis
/// permute the weights: sigma_x swaps (phi+,psi+) and (phi-,psi-), sigma_z
/// swaps (phi+,phi-) and (psi+,psi-), sigma_y swaps (phi+,psi-) and
/// (phi-,psi+).
BellDiagonal apply_to_bell_diagonal(const BellDiagonal& w, const PauliChannel& ch);

/// Choi state of the one-sided channel on the 4-dim polarization space
/// (16-dim, trace one). PSD iff the channel is completely positive.
DensityMatrix choi_matrix(const PauliChannel& ch, Photon side = Photon::B);

// Published duty-cycle presets. BF presets use exact second counts; the
// white0.5 preset uses exact thirds (5/3 s) so the cycle closes at 10 s,
// and white0.7 keeps the as-built 2.3 s entries whose cycle sums to 9.9 s.
struct NoisePreset {
  std::string name;
  LcSchedule schedule;
};

const std::vector<NoisePreset>& noise_presets();

/// Lookup by name ("BF0.3".."white0.7", case-insensitive). Throws
/// std::invalid_argument for unknown names.
const NoisePreset& noise_preset(const std::string& name);

}  // namespace hyperpure
