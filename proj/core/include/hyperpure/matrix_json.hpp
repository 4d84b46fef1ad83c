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

// Shared JSON wire format for complex matrices and the record types exposed
// by the CLI. A matrix serializes as {"dim": d, "re": [...], "im": [...]}
// with row-major arrays.

#pragma once

#include <nlohmann/json.hpp>

#include "hyperpure/noise.hpp"
#include "hyperpure/optics.hpp"
#include "hyperpure/purify.hpp"
#include "hyperpure/qstate.hpp"
#include "hyperpure/recurrence.hpp"

namespace hyperpure {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BellDiagonal& w);
nlohmann::json to_json(const PauliChannel& ch);
nlohmann::json to_json(const LcSchedule& s);
LcSchedule schedule_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoincidenceOutcome& outcome);
nlohmann::json to_json(const PurifyReport& report);
nlohmann::json to_json(const RecurrenceStep& step);

}  // namespace hyperpure
