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

#include <cmath>
#include <stdexcept>

#include "hyperpure/errors.hpp"

namespace hyperpure {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lifts a 2x2 polarization map onto the 4-dim (rail, pol) space.
ComplexMatrix lift(const ComplexMatrix& jones, Rail rail) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  if (rail == Rail::Both || rail == Rail::One) m.block(0, 0, 2, 2) = jones;
  if (rail == Rail::Both || rail == Rail::Two) m.block(2, 2, 2, 2) = jones;
  return m;
}

void check_unitary(const ComplexMatrix& u, const std::string& name) {
  const ComplexMatrix gram = u.adjoint() * u;
  const double err = (gram - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
  if (err > kAlgebraTol) {
    throw invariant_error(name + ": not unitary, max |U+U - I| = " + std::to_string(err));
  }
}

std::string rail_suffix(Rail rail) {
  switch (rail) {
    case Rail::Both: return "";
    case Rail::One: return "@rail1";
    case Rail::Two: return "@rail2";
  }
  return "";
}

// Live output rails per side, in detector layout order: index 1 of
// detector_modes() is rail 1, index 2 is rail 2.
constexpr int kLiveModeIndex[2] = {1, 2};

}  // namespace

ComplexMatrix jones_hwp(double theta_deg) {
  const double t = 2.0 * theta_deg * kPi / 180.0;
  ComplexMatrix m(2, 2);
  m << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
  return m;
}

ComplexMatrix jones_qwp(double theta_deg) {
  // Fast axis at theta from horizontal; the slow component picks up phase i.
  const double t = theta_deg * kPi / 180.0;
  ComplexMatrix rot(2, 2), ret(2, 2);
  rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  ret << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  return rot * ret * rot.transpose();
}

ComplexMatrix jones_lc(LcVoltage v) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  if (v == LcVoltage::Vpi) m(1, 1) = -1.0;
  return m;
}

OpticalElement hwp(double theta_deg, Photon photon, Rail rail) {
  OpticalElement e{"hwp(" + std::to_string(theta_deg) + ")" + rail_suffix(rail),
                   lift(jones_hwp(theta_deg), rail), photon};
  check_unitary(e.map, e.name);
  return e;
}

OpticalElement qwp(double theta_deg, Photon photon, Rail rail) {
  OpticalElement e{"qwp(" + std::to_string(theta_deg) + ")" + rail_suffix(rail),
                   lift(jones_qwp(theta_deg), rail), photon};
  check_unitary(e.map, e.name);
  return e;
}

OpticalElement lc_phase(LcVoltage v, Photon photon, Rail rail) {
  OpticalElement e{std::string("lc(") + (v == LcVoltage::Vpi ? "Vpi" : "V0") + ")" +
                       rail_suffix(rail),
                   lift(jones_lc(v), rail), photon};
  check_unitary(e.map, e.name);
  return e;
}

OpticalElement pbs(Photon photon) {
  // a1H -> out1H, a2V -> out1V, a2H -> out2H, a1V -> out2V.
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 3) = 1.0;
  m(2, 2) = 1.0;
  m(3, 1) = 1.0;
  return OpticalElement{"pbs", std::move(m), photon};
}

ComplexMatrix compose(const Circuit& circuit, Photon photon) {
  ComplexMatrix total = ComplexMatrix::Identity(4, 4);
  for (const OpticalElement& e : circuit.elements) {
    if (e.acts_on != photon) continue;
    if (e.map.rows() != 4 || e.map.cols() != total.rows()) {
      throw std::invalid_argument("compose: element '" + e.name + "' does not chain");
    }
    total = e.map * total;
  }
  return total;
}

Circuit purification_circuit(CircuitPreset preset) {
  Circuit c;
  c.name = to_string(preset);
  switch (preset) {
    case CircuitPreset::Fig2c:
      for (Photon p : {Photon::A, Photon::B}) {
        c.elements.push_back(pbs(p));
        c.elements.push_back(hwp(45.0, p, Rail::Two));
        c.elements.push_back(pbs(p));
      }
      break;
    case CircuitPreset::Fig1:
      for (Photon p : {Photon::A, Photon::B}) {
        c.elements.push_back(hwp(45.0, p, Rail::Two));
        c.elements.push_back(pbs(p));
      }
      break;
  }
  return c;
}

CircuitPreset preset_by_name(const std::string& name) {
  if (name == "fig1") return CircuitPreset::Fig1;
  if (name == "fig2c") return CircuitPreset::Fig2c;
  throw std::invalid_argument("unknown circuit preset '" + name + "' (expected fig1 or fig2c)");
}

const char* to_string(CircuitPreset preset) {
  return preset == CircuitPreset::Fig1 ? "fig1" : "fig2c";
}

const char* to_string(Detector d) {
  static const char* names[] = {"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8"};
  return names[static_cast<int>(d)];
}

Photon detector_side(Detector d) {
  switch (d) {
    case Detector::D1:
    case Detector::D2:
    case Detector::D5:
    case Detector::D6:
      return Photon::A;
    default:
      return Photon::B;
  }
}

std::string DetectorPattern::name() const {
  // D4D5 is conventionally written with the B-side label first.
  if (on_a == Detector::D5 && on_b == Detector::D4) {
    return "D4D5";
  }
  return std::string(to_string(on_a)) + to_string(on_b);
}

std::array<Detector, 4> detector_modes(Photon photon) {
  if (photon == Photon::A) {
    return {Detector::D1, Detector::D2, Detector::D5, Detector::D6};
  }
  return {Detector::D3, Detector::D4, Detector::D7, Detector::D8};
}

const std::array<DetectorPattern, 4>& accepted_patterns() {
  static const std::array<DetectorPattern, 4> kAccepted = {
      DetectorPattern{Detector::D2, Detector::D4},
      DetectorPattern{Detector::D5, Detector::D7},
      DetectorPattern{Detector::D2, Detector::D7},
      DetectorPattern{Detector::D5, Detector::D4},
  };
  return kAccepted;
}

ComplexMatrix detector_isometry(Photon photon) {
  ComplexMatrix v = ComplexMatrix::Zero(8, 4);
  for (int rail = 0; rail < 2; ++rail) {
    const int mode = kLiveModeIndex[rail];
    for (int pol = 0; pol < 2; ++pol) {
      v(mode * 2 + pol, rail * 2 + pol) = 1.0;
    }
  }
  (void)photon;  // both sides share the same embedding
  return v;
}

ComplexMatrix apply_local_maps(const ComplexMatrix& rho16, const ComplexMatrix& map_a,
                               const ComplexMatrix& map_b) {
  if (rho16.rows() != 16 || rho16.cols() != 16) {
    throw std::invalid_argument("apply_local_maps: expected a 16x16 state");
  }
  // Left action, photon A index: rho[(a,b),(c,d)] <- sum_a' A[a,a'] rho[(a',b),(c,d)].
  ComplexMatrix t1 = ComplexMatrix::Zero(16, 16);
  for (int a = 0; a < 4; ++a)
    for (int ap = 0; ap < 4; ++ap) {
      const Complex w = map_a(a, ap);
      if (w == Complex(0, 0)) continue;
      for (int b = 0; b < 4; ++b)
        for (int col = 0; col < 16; ++col) t1(a * 4 + b, col) += w * rho16(ap * 4 + b, col);
    }
  // Left action, photon B index.
  ComplexMatrix t2 = ComplexMatrix::Zero(16, 16);
  for (int b = 0; b < 4; ++b)
    for (int bp = 0; bp < 4; ++bp) {
      const Complex w = map_b(b, bp);
      if (w == Complex(0, 0)) continue;
      for (int a = 0; a < 4; ++a)
        for (int col = 0; col < 16; ++col) t2(a * 4 + b, col) += w * t1(a * 4 + bp, col);
    }
  // Right action with the adjoints, same two contractions on column indices.
  ComplexMatrix t3 = ComplexMatrix::Zero(16, 16);
  for (int c = 0; c < 4; ++c)
    for (int cp = 0; cp < 4; ++cp) {
      const Complex w = std::conj(map_a(c, cp));
      if (w == Complex(0, 0)) continue;
      for (int d = 0; d < 4; ++d)
        for (int row = 0; row < 16; ++row) t3(row, c * 4 + d) += w * t2(row, cp * 4 + d);
    }
  ComplexMatrix out = ComplexMatrix::Zero(16, 16);
  for (int d = 0; d < 4; ++d)
    for (int dp = 0; dp < 4; ++dp) {
      const Complex w = std::conj(map_b(d, dp));
      if (w == Complex(0, 0)) continue;
      for (int c = 0; c < 4; ++c)
        for (int row = 0; row < 16; ++row) out(row, c * 4 + d) += w * t3(row, c * 4 + dp);
    }
  return out;
}

std::vector<CoincidenceOutcome> coincidences(const HyperState& state, const Circuit& circuit) {
  const ComplexMatrix map_a = compose(circuit, Photon::A);
  const ComplexMatrix map_b = compose(circuit, Photon::B);
  check_unitary(map_a, "coincidences: photon A map");
  check_unitary(map_b, "coincidences: photon B map");

  const ComplexMatrix out = apply_local_maps(state.full().matrix(), map_a, map_b);

  const auto modes_a = detector_modes(Photon::A);
  const auto modes_b = detector_modes(Photon::B);

  std::vector<CoincidenceOutcome> result;
  result.reserve(16);
  for (int ma = 0; ma < 4; ++ma) {
    for (int mb = 0; mb < 4; ++mb) {
      CoincidenceOutcome outcome;
      outcome.pattern = DetectorPattern{modes_a[ma], modes_b[mb]};

      const bool live_a = (ma == kLiveModeIndex[0] || ma == kLiveModeIndex[1]);
      const bool live_b = (mb == kLiveModeIndex[0] || mb == kLiveModeIndex[1]);
      if (live_a && live_b) {
        const int ra = (ma == kLiveModeIndex[0]) ? 0 : 1;
        const int rb = (mb == kLiveModeIndex[0]) ? 0 : 1;
        // Polarization block of the occupied rail pair.
        ComplexMatrix block(4, 4);
        for (int pa = 0; pa < 2; ++pa)
          for (int pb = 0; pb < 2; ++pb)
            for (int pa2 = 0; pa2 < 2; ++pa2)
              for (int pb2 = 0; pb2 < 2; ++pb2)
                block(pa * 2 + pb, pa2 * 2 + pb2) =
                    out(ra * 8 + pa * 4 + rb * 2 + pb, ra * 8 + pa2 * 4 + rb * 2 + pb2);
        const double prob = block.trace().real();
        outcome.probability = std::max(0.0, prob);
        if (prob >= kPatternTol) {
          outcome.conditional_pol = DensityMatrix(block / prob);
        }
      }
      result.push_back(std::move(outcome));
    }
  }
  return result;
}

}  // namespace hyperpure
