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

#include "support/random_states.hpp"

#include <cmath>

namespace hyperpure::testing {

double TestRng::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

double TestRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

DensityMatrix random_density(int dim, TestRng& rng) {
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint().eval());
  return DensityMatrix(std::move(m));
}

PureState random_pure(int dim, TestRng& rng) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
  v /= v.norm();
  return PureState(std::move(v));
}

BellDiagonal random_bell_diagonal(TestRng& rng) {
  std::array<double, 4> f{};
  double sum = 0.0;
  for (double& x : f) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    sum += x;
  }
  return BellDiagonal(f[0] / sum, f[1] / sum, f[2] / sum, f[3] / sum);
}

}  // namespace hyperpure::testing
