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

#include "hyperpure/noise.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hyperpure/errors.hpp"

namespace hyperpure {

namespace {

// Weight permutation applied by a one-sided Pauli, indexed (phi+,phi-,psi+,psi-).
constexpr int kWeightPerm[4][4] = {
    {0, 1, 2, 3},  // I
    {2, 3, 0, 1},  // sigma_x
    {3, 2, 1, 0},  // sigma_y
    {1, 0, 3, 2},  // sigma_z
};

ComplexMatrix one_sided(int k, Photon side) {
  const ComplexMatrix& s = pauli(k);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix out(4, 4);
  const ComplexMatrix& left = (side == Photon::A) ? s : id;
  const ComplexMatrix& right = (side == Photon::A) ? id : s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block(i * 2, j * 2, 2, 2) = left(i, j) * right;
  return out;
}

}  // namespace

PauliChannel::PauliChannel(double p_i, double p_x, double p_y, double p_z)
    : p_{p_i, p_x, p_y, p_z} {
  double sum = 0.0;
  for (double p : p_) {
    if (p < -kAlgebraTol) {
      throw invariant_error("PauliChannel: negative probability " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kAlgebraTol) {
    throw invariant_error("PauliChannel: probabilities sum to " + std::to_string(sum));
  }
}

PauliChannel bf_channel(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("bf_channel: p out of [0,1]");
  return PauliChannel(1.0 - p, p, 0.0, 0.0);
}

PauliChannel white_channel(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("white_channel: p out of [0,1]");
  return PauliChannel(1.0 - p, p / 3.0, p / 3.0, p / 3.0);
}

PauliChannel schedule_to_channel(const LcSchedule& s) {
  const std::array<double, 4> t = {s.t1, s.t2, s.t3, s.t4};
  double sum = 0.0;
  for (double ti : t) {
    if (ti < 0.0) throw std::invalid_argument("schedule_to_channel: negative duration");
    sum += ti;
  }
  if (sum <= 0.0) throw std::invalid_argument("schedule_to_channel: all-zero schedule");
  return PauliChannel(t[0] / sum, t[1] / sum, t[2] / sum, t[3] / sum);
}

DensityMatrix apply_channel(const DensityMatrix& rho, const PauliChannel& ch, Photon side) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("apply_channel: expected a 4-dim polarization state");
  }
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) {
    const double p = ch.probabilities()[k];
    if (p == 0.0) continue;
    const ComplexMatrix op = one_sided(k, side);
    out += p * op * rho.matrix() * op.adjoint();
  }
  return DensityMatrix(std::move(out));
}

BellDiagonal apply_to_bell_diagonal(const BellDiagonal& w, const PauliChannel& ch) {
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) {
    const double p = ch.probabilities()[k];
    if (p == 0.0) continue;
    for (int i = 0; i < 4; ++i) out[kWeightPerm[k][i]] += p * w.weights()[i];
  }
  return BellDiagonal(out[0], out[1], out[2], out[3]);
}

DensityMatrix choi_matrix(const PauliChannel& ch, Photon side) {
  // (id (x) E) applied to the maximally entangled state on 4 (x) 4.
  ComplexVector omega = ComplexVector::Zero(16);
  for (int i = 0; i < 4; ++i) omega(i * 4 + i) = 0.5;
  const ComplexMatrix base = omega * omega.adjoint();
  ComplexMatrix out = ComplexMatrix::Zero(16, 16);
  for (int k = 0; k < 4; ++k) {
    const double p = ch.probabilities()[k];
    if (p == 0.0) continue;
    ComplexMatrix op = ComplexMatrix::Zero(16, 16);
    const ComplexMatrix kraus = one_sided(k, side);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        op.block(i * 4, j * 4, 4, 4) = (i == j ? kraus : ComplexMatrix::Zero(4, 4));
    out += p * op * base * op.adjoint();
  }
  return DensityMatrix(std::move(out));
}

const std::vector<NoisePreset>& noise_presets() {
  static const std::vector<NoisePreset> kPresets = {
      {"BF0.3", {7.0, 3.0, 0.0, 0.0}},
      {"BF0.5", {5.0, 5.0, 0.0, 0.0}},
      {"BF0.7", {3.0, 7.0, 0.0, 0.0}},
      {"white0.3", {7.0, 1.0, 1.0, 1.0}},
      {"white0.5", {5.0, 5.0 / 3.0, 5.0 / 3.0, 5.0 / 3.0}},
      {"white0.7", {3.0, 2.3, 2.3, 2.3}},
  };
  return kPresets;
}

const NoisePreset& noise_preset(const std::string& name) {
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  const std::string key = lower(name);
  for (const NoisePreset& p : noise_presets()) {
    if (lower(p.name) == key) return p;
  }
  throw std::invalid_argument("unknown noise preset '" + name + "'");
}

}  // namespace hyperpure
