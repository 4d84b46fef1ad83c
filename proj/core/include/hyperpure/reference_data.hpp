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

// Published experimental values from the reference purification experiment,
// embedded so the CLI comparison columns work offline. Values carry one
// standard deviation of uncertainty in `err` fields.

#pragma once

#include <array>
#include <string_view>

namespace hyperpure::reference {

struct MeasuredValue {
  double value = 0.0;
  double err = 0.0;
};

struct ExperimentRow {
  std::string_view preset;       // matches noise_preset() names
  MeasuredValue before_pol;      // polarization fidelity before purification
  MeasuredValue before_path;     // spatial-mode fidelity before purification
  std::array<MeasuredValue, 4> after;  // D2D4, D5D7, D2D7, D4D5
};

// Rows in the published order.
inline constexpr std::array<ExperimentRow, 6> kExperimentRows = {{
    {"BF0.7", {0.295, 0.001}, {0.991, 0.001},
     {{{0.990, 0.001}, {0.986, 0.001}, {0.983, 0.001}, {0.991, 0.001}}}},
    {"BF0.5", {0.496, 0.001}, {0.990, 0.001},
     {{{0.990, 0.001}, {0.987, 0.001}, {0.985, 0.001}, {0.989, 0.001}}}},
    {"BF0.3", {0.693, 0.001}, {0.990, 0.001},
     {{{0.989, 0.001}, {0.988, 0.001}, {0.984, 0.001}, {0.988, 0.001}}}},
    {"white0.7", {0.268, 0.002}, {0.990, 0.001},
     {{{0.989, 0.001}, {0.985, 0.001}, {0.980, 0.001}, {0.983, 0.001}}}},
    {"white0.5", {0.493, 0.001}, {0.990, 0.001},
     {{{0.987, 0.001}, {0.988, 0.001}, {0.987, 0.001}, {0.985, 0.001}}}},
    {"white0.3", {0.651, 0.001}, {0.990, 0.001},
     {{{0.988, 0.001}, {0.984, 0.001}, {0.983, 0.001}, {0.983, 0.001}}}},
}};

// Source and efficiency figures quoted alongside the experiment.
inline constexpr double kSpatialFidelity = 0.990;       // spatial-mode fidelity
inline constexpr double kPairRatePerSecond = 2400.0;    // generated photon pairs
inline constexpr double kCoincidenceEfficiency = 0.20;  // detected fraction
inline constexpr double kSpdcPairSuccess = 0.001;       // usable-pair probability
inline constexpr int kTwoCopyPairs = 4;                 // copies for one BF + one PF round
inline constexpr double kThreeRoundFidelity = 0.905;    // recurrence endpoint from f0 = 0.8

}  // namespace hyperpure::reference
