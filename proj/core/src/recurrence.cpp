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

#include "hyperpure/recurrence.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperpure/errors.hpp"

namespace hyperpure {

RecurrenceStep bbpssw_round(const BellDiagonal& w) {
  const double f1 = w.f1(), f2 = w.f2(), f3 = w.f3(), f4 = w.f4();
  const double n = (f1 + f2) * (f1 + f2) + (f3 + f4) * (f3 + f4);
  if (n <= 1e-15) {
    throw invariant_error("bbpssw_round: zero success probability");
  }
  BellDiagonal out((f1 * f1 + f2 * f2) / n, 2.0 * f1 * f2 / n, (f3 * f3 + f4 * f4) / n,
                   2.0 * f3 * f4 / n);
  return RecurrenceStep{w, out, n};
}

std::vector<RecurrenceStep> bbpssw_iterate(double f0, int rounds) {
  if (!(f0 > 0.25) || f0 > 1.0) {
    throw std::invalid_argument(
        "bbpssw_iterate: f0 must lie in (1/4, 1]; at or below 1/4 the recurrence cannot purify");
  }
  if (rounds < 1) {
    throw std::invalid_argument("bbpssw_iterate: rounds must be >= 1");
  }
  std::vector<RecurrenceStep> steps;
  steps.reserve(rounds);
  double f = f0;
  for (int i = 0; i < rounds; ++i) {
    const double r = (1.0 - f) / 3.0;
    steps.push_back(bbpssw_round(BellDiagonal(f, r, r, r)));
    f = steps.back().output.f1();
  }
  return steps;
}

long long pair_cost(int rounds) {
  if (rounds < 0 || rounds > 62) {
    throw std::invalid_argument("pair_cost: rounds out of range");
  }
  return 1LL << rounds;
}

double efficiency_ratio(const SpdcModel& model) {
  if (!(model.pair_success_prob > 0.0) || model.pair_success_prob > 1.0) {
    throw std::invalid_argument("efficiency_ratio: pair success probability out of (0,1]");
  }
  if (model.copies_needed_two_copy < 1) {
    throw std::invalid_argument("efficiency_ratio: copies must be >= 1");
  }
  // P_s / P_s^copies = (1/P_s)^(copies-1); the reciprocal-power form keeps
  // round decimal inputs (0.001 -> 1000.0) on exact values.
  const double inv = 1.0 / model.pair_success_prob;
  double ratio = 1.0;
  for (int i = 1; i < model.copies_needed_two_copy; ++i) ratio *= inv;
  return ratio;
}

}  // namespace hyperpure
