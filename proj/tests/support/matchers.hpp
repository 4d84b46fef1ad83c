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

#pragma once

#include <cmath>
#include <complex>

#include "hyperpure/qstate.hpp"

namespace hyperpure::testing {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Entrywise distance after aligning a global phase on b (taken from the
// largest-magnitude entry).
inline double max_abs_diff_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  int r = 0, c = 0;
  double best = -1.0;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        r = i;
        c = j;
      }
  if (best < 1e-300) return max_abs_diff(a, b);
  const Complex phase = a(r, c) / b(r, c);
  return max_abs_diff(a, (phase / std::abs(phase)) * b);
}

}  // namespace hyperpure::testing
