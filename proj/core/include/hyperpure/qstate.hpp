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

// Complex linear algebra and quantum-state primitives: pure states, density
// operators, the Bell basis, tensor products, partial traces and fidelity.
//
// Basis conventions used by the whole library:
//   * A single photon lives in a 4-dim space, spatial (X) polarization, with
//     basis order (a1 H, a1 V, a2 H, a2 V). Index = rail*2 + pol with
//     rail a1 = 0, a2 = 1 and pol H = 0, V = 1.
//   * A photon pair is ordered photon A (X) photon B, so a 16-dim joint index
//     reads (railA, polA, railB, polB) big-endian:
//     index = railA*8 + polA*4 + railB*2 + polB.
//   * Qubit positions follow the same big-endian order, qubit 0 being the
//     most significant factor.
//   * Two-qubit states over the polarization pair (or the spatial pair) use
//     basis (HH, HV, VH, VV) respectively (a1b1, a1b2, a2b1, a2b2).

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace hyperpure {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Tolerances shared across modules.
inline constexpr double kAlgebraTol = 1e-12;   // algebraic identities
inline constexpr double kPsdTol = 1e-10;       // eigenvalue floor for PSD checks
inline constexpr double kPatternTol = 1e-14;   // coincidence probability cutoff

// Dimensions handled by this library (plus rectangular isometries between
// them). Anything else is rejected by the validating constructors.
bool supported_dim(int dim);

/// Normalized state vector. Squared norm must be 1 within 1e-12.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  int dim() const { return static_cast<int>(amp_.size()); }
  const ComplexVector& amplitudes() const { return amp_; }
  Complex operator[](int i) const { return amp_(i); }

 private:
  ComplexVector amp_;
};

/// Trace-one Hermitian PSD operator. Validated on construction:
/// Hermitian within 1e-12 entrywise, trace 1 within 1e-12, and minimum
/// eigenvalue >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

 private:
  ComplexMatrix m_;
};

// The four Bell states, with the sign conventions
//   phi+- = (|HH> +- |VV>)/sqrt(2),  psi+- = (|HV> +- |VH>)/sqrt(2).
enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

constexpr std::array<BellKind, 4> kBellKinds = {
    BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};

const char* to_string(BellKind kind);

/// Bell vector in the two-qubit computational basis (4-dim).
PureState bell_state(BellKind kind);

/// Weights (f1..f4) of a Bell-diagonal two-qubit state, ordered
/// (phi+, phi-, psi+, psi-). Each weight in [0,1], sum 1 within 1e-12.
class BellDiagonal {
 public:
  BellDiagonal(double f1, double f2, double f3, double f4);

  double f1() const { return w_[0]; }
  double f2() const { return w_[1]; }
  double f3() const { return w_[2]; }
  double f4() const { return w_[3]; }
  const std::array<double, 4>& weights() const { return w_; }
  double weight(BellKind kind) const { return w_[static_cast<int>(kind)]; }

 private:
  std::array<double, 4> w_;
};

/// Kronecker product a (X) b (a-major). Output dimension beyond 16 rejected.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// <target| rho |target>, clamped to [0,1]. Dimension mismatch throws.
double fidelity(const DensityMatrix& rho, const PureState& target);

/// sum_i f_i |bell_i><bell_i|.
DensityMatrix bell_diagonal_to_density(const BellDiagonal& w);

struct BellReadout {
  BellDiagonal weights;
  // True when the Bell-basis diagonal did not sum to 1 within 1e-9 and the
  // weights were renormalized (the input carried off-diagonal content).
  bool renormalized;
};

/// Diagonal readout f_i = <bell_i| rho |bell_i> of a 4-dim state. Off-diagonal
/// content in the Bell basis is discarded (Bell-twirl readout).
BellReadout density_to_bell_diagonal(const DensityMatrix& rho);

/// Traces out the given qubits (big-endian positions; qubit 0 is the most
/// significant factor). The input dimension must be a power of two.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& traced_qubits);

/// Pauli matrix by index: 0 = I, 1 = X, 2 = Y, 3 = Z.
const ComplexMatrix& pauli(int k);

/// Two-photon state carrying both polarization and spatial-mode content.
/// Product states keep their 4-dim factors (pol over (polA, polB), spat over
/// (railA, railB)); the 16-dim embedding interleaves them into the
/// (railA, polA, railB, polB) index order documented above.
class HyperState {
 public:
  static HyperState product(DensityMatrix pol, DensityMatrix spat);
  static HyperState from_full(DensityMatrix full16);

  bool is_product() const { return pol_.has_value(); }
  const DensityMatrix& pol() const;
  const DensityMatrix& spat() const;
  const DensityMatrix& full() const { return full_; }

 private:
  HyperState(std::optional<DensityMatrix> pol, std::optional<DensityMatrix> spat,
             DensityMatrix full);

  std::optional<DensityMatrix> pol_;
  std::optional<DensityMatrix> spat_;
  DensityMatrix full_;
};

/// The 16-dim embedding of pol (X) spat into the interleaved photon ordering.
ComplexMatrix embed_pol_spat(const ComplexMatrix& pol, const ComplexMatrix& spat);

}  // namespace hyperpure
