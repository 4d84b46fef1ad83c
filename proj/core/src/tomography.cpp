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

#include "hyperpure/tomography.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "hyperpure/errors.hpp"

namespace hyperpure {

namespace {

ComplexMatrix pauli_pair(int i, int j) {
  ComplexMatrix out(4, 4);
  const ComplexMatrix& a = pauli(i);
  const ComplexMatrix& b = pauli(j);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block(r * 2, c * 2, 2, 2) = a(r, c) * b;
  return out;
}

// Eigenprojector (I + s*sigma)/2 for s = +-1.
ComplexMatrix eigenprojector(PauliOp op, int sign) {
  const ComplexMatrix& s = pauli(static_cast<int>(op));
  return 0.5 * (ComplexMatrix::Identity(2, 2) + static_cast<double>(sign) * s);
}

// Uniform double in [0,1) from the top 53 bits of a mt19937_64 draw; spelled
// out so counts stay bit-reproducible across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::array<PauliOp, 3> kSampledOps = {PauliOp::X, PauliOp::Y, PauliOp::Z};

}  // namespace

const char* to_string(PauliOp op) {
  switch (op) {
    case PauliOp::I: return "I";
    case PauliOp::X: return "X";
    case PauliOp::Y: return "Y";
    case PauliOp::Z: return "Z";
  }
  return "?";
}

const char* to_string(ReconstructionMethod m) {
  return m == ReconstructionMethod::LinearInversion ? "linear_inversion" : "projected";
}

std::array<double, 16> pauli_expectations(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("pauli_expectations: expected a two-qubit state");
  }
  std::array<double, 16> e{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e[i * 4 + j] = (rho.matrix() * pauli_pair(i, j)).trace().real();
  return e;
}

std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, const BasisPair& basis) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("outcome_probabilities: expected a two-qubit state");
  }
  if (basis.a == PauliOp::I || basis.b == PauliOp::I) {
    throw std::invalid_argument("outcome_probabilities: basis operators must be non-identity");
  }
  std::array<double, 4> p{};
  int idx = 0;
  for (int sa : {+1, -1}) {
    for (int sb : {+1, -1}) {
      ComplexMatrix proj(4, 4);
      const ComplexMatrix pa = eigenprojector(basis.a, sa);
      const ComplexMatrix pb = eigenprojector(basis.b, sb);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) proj.block(r * 2, c * 2, 2, 2) = pa(r, c) * pb;
      p[idx++] = std::max(0.0, (rho.matrix() * proj).trace().real());
    }
  }
  return p;
}

double MeasurementRecord::joint_expectation() const {
  const double n = static_cast<double>(shots);
  return (static_cast<double>(counts[0]) - static_cast<double>(counts[1]) -
          static_cast<double>(counts[2]) + static_cast<double>(counts[3])) /
         n;
}

double MeasurementRecord::marginal_a() const {
  const double n = static_cast<double>(shots);
  return (static_cast<double>(counts[0]) + static_cast<double>(counts[1]) -
          static_cast<double>(counts[2]) - static_cast<double>(counts[3])) /
         n;
}

double MeasurementRecord::marginal_b() const {
  const double n = static_cast<double>(shots);
  return (static_cast<double>(counts[0]) - static_cast<double>(counts[1]) +
          static_cast<double>(counts[2]) - static_cast<double>(counts[3])) /
         n;
}

MeasurementRecord sample_counts(const DensityMatrix& rho, const BasisPair& basis,
                                std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
  const std::array<double, 4> p = outcome_probabilities(rho, basis);
  std::array<double, 4> cdf{};
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  cdf[3] = 1.0;  // guard against float shortfall

  std::mt19937_64 rng(seed);
  MeasurementRecord rec;
  rec.basis = basis;
  rec.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform01(rng);
    int k = 0;
    while (u >= cdf[k]) ++k;
    ++rec.counts[k];
  }
  return rec;
}

std::array<double, 16> sampled_expectations(const DensityMatrix& rho,
                                            std::uint64_t shots_per_setting, std::uint64_t seed) {
  std::array<double, 16> e{};
  e[0] = 1.0;
  std::uint64_t stream = seed;
  for (PauliOp a : kSampledOps) {
    for (PauliOp b : kSampledOps) {
      const MeasurementRecord rec =
          sample_counts(rho, BasisPair{a, b}, shots_per_setting, splitmix64(stream));
      const int i = static_cast<int>(a);
      const int j = static_cast<int>(b);
      e[i * 4 + j] = rec.joint_expectation();
      // Each single-qubit expectation is seen by three settings; average them.
      e[i * 4 + 0] += rec.marginal_a() / 3.0;
      e[0 * 4 + j] += rec.marginal_b() / 3.0;
    }
  }
  return e;
}

Reconstruction reconstruct(const std::array<double, 16>& expectations,
                           const std::optional<PureState>& target) {
  if (std::abs(expectations[0] - 1.0) > 1e-9) {
    throw std::invalid_argument("reconstruct: <II> must equal 1");
  }
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m += 0.25 * expectations[i * 4 + j] * pauli_pair(i, j);

  ReconstructionMethod method = ReconstructionMethod::LinearInversion;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    // Clip negative eigenvalues and renormalize the trace.
    Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0);
    vals /= vals.sum();
    m = es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
    m = 0.5 * (m + m.adjoint().eval());
    method = ReconstructionMethod::Projected;
  }
  Reconstruction rec{DensityMatrix(std::move(m)), method, 0.0, 0.0};
  const PureState t = target.value_or(bell_state(BellKind::PhiPlus));
  rec.fidelity_vs_target = fidelity(rec.rho, t);
  return rec;
}

double error_bar(const DensityMatrix& rho, const PureState& target, std::uint64_t shots,
                 int trials, std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("error_bar: trials must be >= 2");
  if (shots == 0) return 0.0;  // exact mode: every trial reconstructs the same state

  std::uint64_t stream = seed ^ 0xA02BDBF7BB3C0A7ULL;
  std::vector<double> fids(trials);
  double mean = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto exps = sampled_expectations(rho, shots, splitmix64(stream));
    fids[t] = reconstruct(exps, target).fidelity_vs_target;
    mean += fids[t];
  }
  mean /= trials;
  double ss = 0.0;
  for (double f : fids) ss += (f - mean) * (f - mean);
  return std::sqrt(ss / (trials - 1));
}

Circuit spatial_measurement_map() {
  Circuit c;
  c.name = "spatial-measurement";
  for (Photon p : {Photon::A, Photon::B}) {
    c.elements.push_back(pbs(p));
    c.elements.push_back(hwp(45.0, p, Rail::Two));
    c.elements.push_back(pbs(p));
  }
  return c;
}

}  // namespace hyperpure
