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

// hyperpure CLI: one-step hyperentanglement-assisted purification simulator.
// Exit codes: 0 success, 2 invalid arguments, 3 numerical-invariant violation.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli_commands.hpp"
#include "hyperpure/errors.hpp"

namespace {

using hyperpure::NoiseKind;
using hyperpure::cli::CommandResult;
using hyperpure::cli::OutputFormat;
using hyperpure::cli::RunConfig;
using hyperpure::cli::SamplingOptions;
using hyperpure::cli::TomoStateSelector;

int emit(const CommandResult& result, const RunConfig& config) {
  const std::string text = result.render(config.format);
  if (config.output_path) {
    std::ofstream out(*config.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file '" << *config.output_path << "'\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulator for one-step deterministic polarization-entanglement purification\n"
      "with polarization-spatial hyperentangled photon pairs."};
  app.require_subcommand(1);

  RunConfig config;
  std::map<std::string, OutputFormat> format_map{{"pretty", OutputFormat::Pretty},
                                                 {"json", OutputFormat::Json},
                                                 {"csv", OutputFormat::Csv}};
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case))
      ->default_str("pretty");
  std::string output_path;
  auto* output_opt = app.add_option("--output", output_path, "Write output to a file");
  app.add_option("--seed", config.seed, "Seed for sampled modes")->default_val(12345);

  std::function<CommandResult()> run;

  // table1
  auto* table1 = app.add_subcommand("table1", "Before/after fidelity table for all six presets");
  double t1_spatial = 1.0;
  table1->add_option("--spatial-fidelity", t1_spatial, "Spatial-mode fidelity")
      ->check(CLI::Range(0.0, 1.0))
      ->default_val(1.0);
  bool t1_sampled = false;
  table1->add_flag("--sampled", t1_sampled, "Finite-shot tomography instead of exact values");
  std::uint64_t t1_shots = 10000;
  int t1_trials = 10;
  table1->add_option("--shots", t1_shots, "Shots per basis setting")->default_val(10000);
  table1->add_option("--trials", t1_trials, "Monte Carlo resamples for error bars")
      ->default_val(10);
  table1->callback([&] {
    run = [&] {
      return hyperpure::cli::cmd_table1(
          t1_spatial, SamplingOptions{t1_sampled, t1_shots, t1_trials, config.seed});
    };
  });

  // purify
  auto* purify = app.add_subcommand("purify", "Purification report for one noise setting");
  std::string pu_noise = "white";
  double pu_p = 0.0;
  double pu_spatial = 1.0;
  std::string pu_preset = "fig2c";
  purify->add_option("--noise", pu_noise, "Noise kind: bf | white")
      ->check(CLI::IsMember({"bf", "white"}))
      ->default_str("white");
  purify->add_option("--p", pu_p, "Noise fraction in [0,1]")->required()
      ->check(CLI::Range(0.0, 1.0));
  purify->add_option("--spatial-fidelity", pu_spatial, "Spatial-mode fidelity")
      ->check(CLI::Range(0.0, 1.0))
      ->default_val(1.0);
  purify->add_option("--preset", pu_preset, "Circuit preset: fig1 | fig2c")
      ->check(CLI::IsMember({"fig1", "fig2c"}))
      ->default_str("fig2c");
  purify->callback([&] {
    run = [&] {
      return hyperpure::cli::cmd_purify(
          pu_noise == "bf" ? NoiseKind::BitFlip : NoiseKind::White, pu_p, pu_spatial, pu_preset);
    };
  });

  // densmat
  auto* densmat = app.add_subcommand("densmat", "Density-matrix dump before/after purification");
  std::string dm_noise;
  std::string dm_stage = "before";
  double dm_spatial = 1.0;
  std::string dm_preset = "fig2c";
  densmat->add_option("--noise", dm_noise, "Noise preset, e.g. BF0.5 or white0.7")->required();
  densmat->add_option("--stage", dm_stage, "before | after")
      ->check(CLI::IsMember({"before", "after"}))
      ->default_str("before");
  densmat->add_option("--spatial-fidelity", dm_spatial, "Spatial-mode fidelity")
      ->check(CLI::Range(0.0, 1.0))
      ->default_val(1.0);
  densmat->add_option("--preset", dm_preset, "Circuit preset: fig1 | fig2c")
      ->check(CLI::IsMember({"fig1", "fig2c"}))
      ->default_str("fig2c");
  densmat->callback([&] {
    run = [&] { return hyperpure::cli::cmd_densmat(dm_noise, dm_stage, dm_spatial, dm_preset); };
  });

  // schedule
  auto* schedule = app.add_subcommand("schedule", "Duty-cycle durations for a noise preset");
  std::string sc_preset;
  schedule->add_option("preset", sc_preset, "Noise preset name")->required();
  schedule->callback([&] {
    run = [&] { return hyperpure::cli::cmd_schedule(sc_preset); };
  });

  // bbpssw
  auto* bbpssw = app.add_subcommand("bbpssw", "Two-copy recurrence trajectory");
  double bb_f0 = 0.8;
  int bb_rounds = 3;
  bbpssw->add_option("--f0", bb_f0, "Initial isotropic fidelity in (1/4, 1]")->required();
  bbpssw->add_option("--rounds", bb_rounds, "Number of rounds")->default_val(3)
      ->check(CLI::Range(1, 30));
  bbpssw->callback([&] {
    run = [&] { return hyperpure::cli::cmd_bbpssw(bb_f0, bb_rounds); };
  });

  // efficiency
  auto* efficiency = app.add_subcommand("efficiency", "SPDC pair-cost efficiency ratio");
  double ef_ps = 0.001;
  int ef_copies = 4;
  efficiency->add_option("--ps", ef_ps, "Per-attempt usable-pair probability")
      ->default_val(0.001);
  efficiency->add_option("--copies", ef_copies, "Copies needed by the two-copy scheme")
      ->default_val(4)
      ->check(CLI::Range(1, 32));
  efficiency->callback([&] {
    run = [&] { return hyperpure::cli::cmd_efficiency(ef_ps, ef_copies); };
  });

  // compare
  auto* compare = app.add_subcommand("compare", "One-step vs two-copy recurrence comparison");
  double cp_f0 = 0.8;
  double cp_ps = 0.001;
  int cp_rounds = 3;
  int cp_copies = 4;
  compare->add_option("--f0", cp_f0, "Input polarization fidelity")->required();
  compare->add_option("--ps", cp_ps, "Per-attempt usable-pair probability")->default_val(0.001);
  compare->add_option("--rounds", cp_rounds, "Recurrence rounds to show")->default_val(3)
      ->check(CLI::Range(1, 30));
  compare->add_option("--copies", cp_copies, "Copies needed by the two-copy scheme")
      ->default_val(4)
      ->check(CLI::Range(1, 32));
  compare->callback([&] {
    run = [&] { return hyperpure::cli::cmd_compare(cp_f0, cp_ps, cp_rounds, cp_copies); };
  });

  // tomo
  auto* tomo = app.add_subcommand("tomo", "Two-qubit tomography of a simulated state");
  TomoStateSelector selector;
  std::string tm_bell;
  std::string tm_noise;
  auto* bell_opt = tomo->add_option("--bell", tm_bell, "Bell state: phi+ phi- psi+ psi-")
                       ->check(CLI::IsMember({"phi+", "phi-", "psi+", "psi-"}));
  auto* noise_opt = tomo->add_option("--noise", tm_noise, "Noise preset, e.g. white0.7");
  bell_opt->excludes(noise_opt);
  tomo->add_option("--stage", selector.stage, "before | after (with --noise)")
      ->check(CLI::IsMember({"before", "after"}))
      ->default_str("before");
  tomo->add_option("--dof", selector.dof, "Degree of freedom to measure: pol | spat")
      ->check(CLI::IsMember({"pol", "spat"}))
      ->default_str("pol");
  tomo->add_option("--spatial-fidelity", selector.spatial_fidelity, "Spatial-mode fidelity")
      ->check(CLI::Range(0.0, 1.0))
      ->default_val(1.0);
  tomo->add_option("--preset", selector.circuit_preset, "Circuit preset: fig1 | fig2c")
      ->check(CLI::IsMember({"fig1", "fig2c"}))
      ->default_str("fig2c");
  bool tm_exact = false;
  tomo->add_flag("--exact", tm_exact, "Exact expectations (default is sampled)");
  std::uint64_t tm_shots = 100000;
  int tm_trials = 20;
  tomo->add_option("--shots", tm_shots, "Shots per basis setting")->default_val(100000);
  tomo->add_option("--trials", tm_trials, "Monte Carlo resamples for the error bar")
      ->default_val(20);
  tomo->callback([&] {
    run = [&] {
      if (!tm_bell.empty()) selector.bell = tm_bell;
      if (!tm_noise.empty()) selector.noise_preset_name = tm_noise;
      return hyperpure::cli::cmd_tomo(
          selector, SamplingOptions{!tm_exact, tm_shots, tm_trials, config.seed});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (output_opt->count() > 0) config.output_path = output_path;

  try {
    return emit(run(), config);
  } catch (const hyperpure::invariant_error& e) {
    std::cerr << "numerical invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
