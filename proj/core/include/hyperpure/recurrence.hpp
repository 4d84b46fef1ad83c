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

// Two-copy recurrence purification baseline and the SPDC pair-cost model.
//
// One round consumes two identical Bell-diagonal pairs: both parties apply a
// CNOT from their qubit of the first pair onto their qubit of the second,
// measure the second pair in the computational basis, and keep the first pair
// when the outcomes agree. On weights (f1,f2,f3,f4) ordered
// (phi+,phi-,psi+,psi-) this gives
//
//   f1' = (f1^2 + f2^2)/N,  f2' = 2 f1 f2 / N,
//   f3' = (f3^2 + f4^2)/N,  f4' = 2 f3 f4 / N,
//   N   = (f1+f2)^2 + (f3+f4)^2  (the success probability).

#pragma once

#include <vector>

#include "hyperpure/qstate.hpp"

namespace hyperpure {

struct RecurrenceStep {
  BellDiagonal input;
  BellDiagonal output;
  double success_prob = 0.0;
};

/// One recurrence round on a Bell-diagonal pair.
RecurrenceStep bbpssw_round(const BellDiagonal& w);

/// Chained rounds starting from the isotropic state with weight f0 on phi+.
/// Each round first depolarizes its input back to isotropic form (the twirl
/// step of the original protocol), so the fidelity recurrence is
/// f -> (f^2 + r^2) / (f^2 + 2 f r + 5 r^2) with r = (1-f)/3.
/// Requires f0 in (1/4, 1]; at or below 1/4 the recurrence cannot purify and
/// the call throws std::invalid_argument.
std::vector<RecurrenceStep> bbpssw_iterate(double f0, int rounds);

/// Entangled pairs consumed by `rounds` recurrence rounds: 2^rounds.
long long pair_cost(int rounds);

struct SpdcModel {
  double pair_success_prob = 0.001;  // per-attempt usable-pair probability
  int copies_needed_two_copy = 4;    // pairs needed for one bit-flip + one phase-flip round
};

/// (one-copy success) / (multi-copy success) = P_s / P_s^copies.
double efficiency_ratio(const SpdcModel& model);

}  // namespace hyperpure
