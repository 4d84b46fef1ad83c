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

#include "hyperpure/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "hyperpure/errors.hpp"

namespace hyperpure {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int qubit_count(int dim) {
  int n = 0;
  while ((1 << n) < dim) ++n;
  return n;
}

}  // namespace

bool supported_dim(int dim) {
  return dim == 2 || dim == 4 || dim == 8 || dim == 16;
}

PureState::PureState(ComplexVector amplitudes) : amp_(std::move(amplitudes)) {
  if (!supported_dim(dim())) {
    throw std::invalid_argument("PureState: unsupported dimension " + std::to_string(dim()));
  }
  const double n2 = amp_.squaredNorm();
  if (std::abs(n2 - 1.0) > kAlgebraTol) {
    throw invariant_error("PureState: squared norm deviates from 1 by " +
                          std::to_string(std::abs(n2 - 1.0)));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || !supported_dim(static_cast<int>(m_.rows()))) {
    throw std::invalid_argument("DensityMatrix: unsupported shape");
  }
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kAlgebraTol) {
    throw invariant_error("DensityMatrix: not Hermitian, max |M - M+| = " + std::to_string(herm));
  }
  const double tr_err = std::abs(m_.trace() - Complex(1.0, 0.0));
  if (tr_err > kAlgebraTol) {
    throw invariant_error("DensityMatrix: trace deviates from 1 by " + std::to_string(tr_err));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw invariant_error("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  const ComplexVector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

const char* to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
  }
  return "?";
}

PureState bell_state(BellKind kind) {
  ComplexVector v = ComplexVector::Zero(4);
  switch (kind) {
    case BellKind::PhiPlus:
      v(0) = kInvSqrt2;
      v(3) = kInvSqrt2;
      break;
    case BellKind::PhiMinus:
      v(0) = kInvSqrt2;
      v(3) = -kInvSqrt2;
      break;
    case BellKind::PsiPlus:
      v(1) = kInvSqrt2;
      v(2) = kInvSqrt2;
      break;
    case BellKind::PsiMinus:
      v(1) = kInvSqrt2;
      v(2) = -kInvSqrt2;
      break;
  }
  return PureState(v);
}

BellDiagonal::BellDiagonal(double f1, double f2, double f3, double f4) : w_{f1, f2, f3, f4} {
  double sum = 0.0;
  for (double f : w_) {
    if (f < -kAlgebraTol || f > 1.0 + kAlgebraTol) {
      throw invariant_error("BellDiagonal: weight out of [0,1]: " + std::to_string(f));
    }
    sum += f;
  }
  if (std::abs(sum - 1.0) > kAlgebraTol) {
    throw invariant_error("BellDiagonal: weights sum to " + std::to_string(sum));
  }
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const int dim = a.dim() * b.dim();
  if (dim > 16 || !supported_dim(dim)) {
    throw std::invalid_argument("tensor: output dimension " + std::to_string(dim) +
                                " not supported");
  }
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out.block(i * b.dim(), j * b.dim(), b.dim(), b.dim()) = a.matrix()(i, j) * b.matrix();
  return DensityMatrix(std::move(out));
}

double fidelity(const DensityMatrix& rho, const PureState& target) {
  if (rho.dim() != target.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const Complex f = target.amplitudes().adjoint() * rho.matrix() * target.amplitudes();
  if (std::abs(f.imag()) > kAlgebraTol) {
    throw invariant_error("fidelity: non-real overlap, imag = " + std::to_string(f.imag()));
  }
  return std::clamp(f.real(), 0.0, 1.0);
}

DensityMatrix bell_diagonal_to_density(const BellDiagonal& w) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    const ComplexVector v = bell_state(kBellKinds[i]).amplitudes();
    m += w.weights()[i] * (v * v.adjoint());
  }
  return DensityMatrix(std::move(m));
}

BellReadout density_to_bell_diagonal(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("density_to_bell_diagonal: expected 4-dim state");
  }
  std::array<double, 4> f{};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    const ComplexVector v = bell_state(kBellKinds[i]).amplitudes();
    f[i] = std::max(0.0, (v.adjoint() * rho.matrix() * v).real()(0, 0));
    sum += f[i];
  }
  const bool renorm = std::abs(sum - 1.0) > 1e-9;
  if (renorm) {
    for (double& x : f) x /= sum;
  } else {
    // Absorb sub-1e-9 float noise so the weights pass their own invariant.
    const double fix = 1.0 - sum;
    f[0] += fix;
  }
  return BellReadout{BellDiagonal(f[0], f[1], f[2], f[3]), renorm};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& traced_qubits) {
  const int dim = rho.dim();
  if (!is_power_of_two(dim)) {
    throw std::invalid_argument("partial_trace: dimension is not a power of two");
  }
  const int n = qubit_count(dim);
  std::vector<bool> traced(n, false);
  for (int q : traced_qubits) {
    if (q < 0 || q >= n || traced[q]) {
      throw std::invalid_argument("partial_trace: bad qubit index set");
    }
    traced[q] = true;
  }
  std::vector<int> kept;
  for (int q = 0; q < n; ++q)
    if (!traced[q]) kept.push_back(q);
  const int nk = static_cast<int>(kept.size());
  const int nt = n - nk;
  if (nk == 0) {
    throw std::invalid_argument("partial_trace: cannot trace out every qubit");
  }

  // Big-endian: qubit 0 owns the most significant bit.
  auto weave = [&](int kept_bits, int traced_bits) {
    int idx = 0;
    int kb = nk - 1, tb = nt - 1;
    for (int q = 0; q < n; ++q) {
      int bit;
      if (traced[q]) {
        bit = (traced_bits >> tb--) & 1;
      } else {
        bit = (kept_bits >> kb--) & 1;
      }
      idx = (idx << 1) | bit;
    }
    return idx;
  };

  const int out_dim = 1 << nk;
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (int r = 0; r < out_dim; ++r)
    for (int c = 0; c < out_dim; ++c)
      for (int t = 0; t < (1 << nt); ++t)
        out(r, c) += rho.matrix()(weave(r, t), weave(c, t));
  return DensityMatrix(std::move(out));
}

const ComplexMatrix& pauli(int k) {
  static const std::array<ComplexMatrix, 4> sigma = [] {
    std::array<ComplexMatrix, 4> s;
    for (auto& m : s) m = ComplexMatrix::Zero(2, 2);
    s[0](0, 0) = 1;
    s[0](1, 1) = 1;
    s[1](0, 1) = 1;
    s[1](1, 0) = 1;
    s[2](0, 1) = Complex(0, -1);
    s[2](1, 0) = Complex(0, 1);
    s[3](0, 0) = 1;
    s[3](1, 1) = -1;
    return s;
  }();
  if (k < 0 || k > 3) throw std::invalid_argument("pauli: index out of range");
  return sigma[k];
}

ComplexMatrix embed_pol_spat(const ComplexMatrix& pol, const ComplexMatrix& spat) {
  if (pol.rows() != 4 || pol.cols() != 4 || spat.rows() != 4 || spat.cols() != 4) {
    throw std::invalid_argument("embed_pol_spat: both factors must be 4x4");
  }
  ComplexMatrix full = ComplexMatrix::Zero(16, 16);
  for (int ra = 0; ra < 2; ++ra)
    for (int pa = 0; pa < 2; ++pa)
      for (int rb = 0; rb < 2; ++rb)
        for (int pb = 0; pb < 2; ++pb)
          for (int ra2 = 0; ra2 < 2; ++ra2)
            for (int pa2 = 0; pa2 < 2; ++pa2)
              for (int rb2 = 0; rb2 < 2; ++rb2)
                for (int pb2 = 0; pb2 < 2; ++pb2)
                  full(ra * 8 + pa * 4 + rb * 2 + pb, ra2 * 8 + pa2 * 4 + rb2 * 2 + pb2) =
                      spat(ra * 2 + rb, ra2 * 2 + rb2) * pol(pa * 2 + pb, pa2 * 2 + pb2);
  return full;
}

HyperState::HyperState(std::optional<DensityMatrix> pol, std::optional<DensityMatrix> spat,
                       DensityMatrix full)
    : pol_(std::move(pol)), spat_(std::move(spat)), full_(std::move(full)) {}

HyperState HyperState::product(DensityMatrix pol, DensityMatrix spat) {
  if (pol.dim() != 4 || spat.dim() != 4) {
    throw std::invalid_argument("HyperState::product: factors must be 4-dim");
  }
  DensityMatrix full(embed_pol_spat(pol.matrix(), spat.matrix()));
  return HyperState(std::move(pol), std::move(spat), std::move(full));
}

HyperState HyperState::from_full(DensityMatrix full16) {
  if (full16.dim() != 16) {
    throw std::invalid_argument("HyperState::from_full: expected 16-dim state");
  }
  return HyperState(std::nullopt, std::nullopt, std::move(full16));
}

const DensityMatrix& HyperState::pol() const {
  if (!pol_) throw std::logic_error("HyperState: not in product form");
  return *pol_;
}

const DensityMatrix& HyperState::spat() const {
  if (!spat_) throw std::logic_error("HyperState: not in product form");
  return *spat_;
}

}  // namespace hyperpure
