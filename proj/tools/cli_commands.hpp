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

// Command implementations behind the hyperpure CLI. Each command returns its
// result in all three output renderings so the frontend only selects one.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperpure/purify.hpp"
#include "hyperpure/qstate.hpp"

namespace hyperpure::cli {

enum class OutputFormat { Pretty, Json, Csv };

struct RunConfig {
  std::string command;
  OutputFormat format = OutputFormat::Pretty;
  std::optional<std::string> output_path;
  std::uint64_t seed = 12345;
};

struct CommandResult {
  nlohmann::json data;
  std::string pretty;
  std::string csv;

  std::string render(OutputFormat format) const;
};

// Shot-noise options shared by the sampled modes.
struct SamplingOptions {
  bool sampled = false;             // false = exact expectations
  std::uint64_t shots = 100000;     // per basis setting
  int trials = 10;                  // Monte Carlo resamples for error bars
  std::uint64_t seed = 12345;
};

/// Six-preset before/after fidelity table with the published experimental
/// values alongside.
CommandResult cmd_table1(double spatial_fidelity, const SamplingOptions& sampling);

/// Purification report for one noise setting.
CommandResult cmd_purify(NoiseKind noise, double p, double spatial_fidelity,
                         const std::string& preset);

/// Density-matrix dump (shared JSON matrix format; CSV for bar charts) of the
/// polarization state before or after purification.
CommandResult cmd_densmat(const std::string& noise_preset_name, const std::string& stage,
                          double spatial_fidelity, const std::string& preset);

/// Duty-cycle durations and the resulting Pauli channel for a noise preset.
CommandResult cmd_schedule(const std::string& noise_preset_name);

/// Recurrence trajectory from an isotropic start.
CommandResult cmd_bbpssw(double f0, int rounds);

/// Pair-cost efficiency ratio of the one-copy protocol vs the two-copy one.
CommandResult cmd_efficiency(double ps, int copies);

/// Side-by-side one-step vs recurrence comparison.
CommandResult cmd_compare(double f0, double ps, int rounds, int copies);

struct TomoStateSelector {
  // Either a Bell state by name ("phi+", "phi-", "psi+", "psi-"), or a noise
  // preset plus stage ("before" | "after").
  std::optional<std::string> bell;
  std::optional<std::string> noise_preset_name;
  std::string stage = "before";
  std::string dof = "pol";  // "pol" | "spat" (spatial goes through the mode swap)
  double spatial_fidelity = 1.0;
  std::string circuit_preset = "fig2c";
};

/// Tomography of a selected state: expectations, reconstructed matrix and
/// fidelity vs phi+ with a Monte Carlo error bar in sampled mode.
CommandResult cmd_tomo(const TomoStateSelector& selector, const SamplingOptions& sampling);

}  // namespace hyperpure::cli
