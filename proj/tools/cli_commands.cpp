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

#include "cli_commands.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hyperpure/matrix_json.hpp"
#include "hyperpure/noise.hpp"
#include "hyperpure/recurrence.hpp"
#include "hyperpure/reference_data.hpp"
#include "hyperpure/tomography.hpp"

namespace hyperpure::cli {

using nlohmann::json;

namespace {

constexpr const char* kCrlf = "\r\n";

std::string strf(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  char buf[256];
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Estimate {
  double value = 0.0;
  double err = 0.0;
};

json to_json(const Estimate& e) { return json{{"value", e.value}, {"err", e.err}}; }

// Paper-style rendering: three decimals with the uncertainty in the last
// digit(s), e.g. 0.295(1). Exact values print without parentheses.
std::string fmt_meas(const Estimate& e) {
  std::string out = strf("%.3f", e.value);
  if (e.err > 0.0) {
    const long digits = std::lround(e.err * 1000.0);
    out += "(" + std::to_string(std::max(1L, digits)) + ")";
  }
  return out;
}

std::string fmt_meas(const reference::MeasuredValue& v) {
  return fmt_meas(Estimate{v.value, v.err});
}

Estimate estimate_fidelity(const DensityMatrix& rho, const PureState& target,
                           const SamplingOptions& sampling, std::uint64_t& stream) {
  if (!sampling.sampled) {
    return Estimate{fidelity(rho, target), 0.0};
  }
  const auto exps = sampled_expectations(rho, sampling.shots, splitmix64(stream));
  Estimate e;
  e.value = reconstruct(exps, target).fidelity_vs_target;
  e.err = error_bar(rho, target, sampling.shots, sampling.trials, splitmix64(stream));
  return e;
}

const std::array<const char*, 4> kPatternNames = {"D2D4", "D5D7", "D2D7", "D4D5"};
const std::array<const char*, 4> kPolBasis = {"HH", "HV", "VH", "VV"};

DensityMatrix noisy_pol_state(const NoisePreset& preset) {
  const PauliChannel ch = schedule_to_channel(preset.schedule);
  return bell_diagonal_to_density(apply_to_bell_diagonal(BellDiagonal(1, 0, 0, 0), ch));
}

// Probability-weighted mixture of the accepted-pattern conditionals.
DensityMatrix aggregate_after_state(const PurifyReport& report) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  double mass = 0.0;
  for (const CoincidenceOutcome& o : report.outcomes) {
    if (!o.conditional_pol) continue;
    m += o.probability * o.conditional_pol->matrix();
    mass += o.probability;
  }
  if (mass <= 0.0) throw invariant_error("aggregate_after_state: no accepted pattern fired");
  return DensityMatrix(m / mass);
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ",";
    line += fields[i];
  }
  return line + kCrlf;
}

}  // namespace

std::string CommandResult::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::Pretty: return pretty;
    case OutputFormat::Json: return data.dump(2) + "\n";
    case OutputFormat::Csv: return csv;
  }
  return pretty;
}

CommandResult cmd_table1(double spatial_fidelity, const SamplingOptions& sampling) {
  const DensityMatrix spat = spatial_state_from_fidelity(spatial_fidelity);
  const PureState phi_plus = bell_state(BellKind::PhiPlus);
  std::uint64_t stream = sampling.seed;

  json rows = json::array();
  std::ostringstream pretty;
  std::string csv = csv_line(
      {"preset", "before_pol", "before_pol_err", "before_path", "before_path_err",
       "after_D2D4", "after_D2D4_err", "after_D5D7", "after_D5D7_err", "after_D2D7",
       "after_D2D7_err", "after_D4D5", "after_D4D5_err", "success", "ref_before_pol",
       "ref_before_path", "ref_after_D2D4", "ref_after_D5D7", "ref_after_D2D7",
       "ref_after_D4D5"});

  pretty << "Fidelity vs phi+ before and after one-step purification (preset fig2c)\n";
  pretty << strf("spatial fidelity %.3f, %s mode\n\n", spatial_fidelity,
                 sampling.sampled ? "sampled" : "exact");
  pretty << "preset     before-pol  before-path  D2D4      D5D7      D2D7      D4D5\n";

  for (const reference::ExperimentRow& ref : reference::kExperimentRows) {
    const NoisePreset& preset = noise_preset(std::string(ref.preset));
    const DensityMatrix before_pol = noisy_pol_state(preset);
    const PurifyReport report =
        purify(HyperState::product(before_pol, spat), CircuitPreset::Fig2c);

    const Estimate e_pol = estimate_fidelity(before_pol, phi_plus, sampling, stream);
    const Estimate e_path = estimate_fidelity(spat, phi_plus, sampling, stream);
    std::array<Estimate, 4> e_after;
    for (int i = 0; i < 4; ++i) {
      if (report.outcomes[i].conditional_pol) {
        e_after[i] =
            estimate_fidelity(*report.outcomes[i].conditional_pol, phi_plus, sampling, stream);
      }
    }

    json after = json::object();
    for (int i = 0; i < 4; ++i) after[kPatternNames[i]] = to_json(e_after[i]);
    json ref_after = json::object();
    for (int i = 0; i < 4; ++i)
      ref_after[kPatternNames[i]] = json{{"value", ref.after[i].value}, {"err", ref.after[i].err}};
    rows.push_back(json{
        {"preset", preset.name},
        {"before_pol", to_json(e_pol)},
        {"before_path", to_json(e_path)},
        {"after", std::move(after)},
        {"success", report.total_success_prob},
        {"reference",
         json{{"before_pol", json{{"value", ref.before_pol.value}, {"err", ref.before_pol.err}}},
              {"before_path",
               json{{"value", ref.before_path.value}, {"err", ref.before_path.err}}},
              {"after", std::move(ref_after)}}}});

    pretty << strf("%-9s  %-10s  %-11s  %-8s  %-8s  %-8s  %-8s\n", preset.name.c_str(),
                   fmt_meas(e_pol).c_str(), fmt_meas(e_path).c_str(), fmt_meas(e_after[0]).c_str(),
                   fmt_meas(e_after[1]).c_str(), fmt_meas(e_after[2]).c_str(),
                   fmt_meas(e_after[3]).c_str());
    pretty << strf("%-9s  %-10s  %-11s  %-8s  %-8s  %-8s  %-8s\n", "  (ref)",
                   fmt_meas(ref.before_pol).c_str(), fmt_meas(ref.before_path).c_str(),
                   fmt_meas(ref.after[0]).c_str(), fmt_meas(ref.after[1]).c_str(),
                   fmt_meas(ref.after[2]).c_str(), fmt_meas(ref.after[3]).c_str());

    csv += csv_line({preset.name, strf("%.12g", e_pol.value), strf("%.12g", e_pol.err),
                     strf("%.12g", e_path.value), strf("%.12g", e_path.err),
                     strf("%.12g", e_after[0].value), strf("%.12g", e_after[0].err),
                     strf("%.12g", e_after[1].value), strf("%.12g", e_after[1].err),
                     strf("%.12g", e_after[2].value), strf("%.12g", e_after[2].err),
                     strf("%.12g", e_after[3].value), strf("%.12g", e_after[3].err),
                     strf("%.12g", report.total_success_prob), strf("%.3f", ref.before_pol.value),
                     strf("%.3f", ref.before_path.value), strf("%.3f", ref.after[0].value),
                     strf("%.3f", ref.after[1].value), strf("%.3f", ref.after[2].value),
                     strf("%.3f", ref.after[3].value)});
  }

  CommandResult result;
  result.data = json{{"command", "table1"},
                     {"spatial_fidelity", spatial_fidelity},
                     {"mode", sampling.sampled ? "sampled" : "exact"},
                     {"circuit_preset", "fig2c"},
                     {"rows", std::move(rows)}};
  if (sampling.sampled) {
    result.data["shots"] = sampling.shots;
    result.data["trials"] = sampling.trials;
    result.data["seed"] = sampling.seed;
  }
  result.pretty = pretty.str();
  result.csv = csv;
  return result;
}

CommandResult cmd_purify(NoiseKind noise, double p, double spatial_fidelity,
                         const std::string& preset) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("purify: noise fraction out of [0,1]");
  const PauliChannel ch = (noise == NoiseKind::BitFlip) ? bf_channel(p) : white_channel(p);
  const BellDiagonal weights = apply_to_bell_diagonal(BellDiagonal(1, 0, 0, 0), ch);
  const DensityMatrix spat = spatial_state_from_fidelity(spatial_fidelity);
  const PurifyReport report = purify_with_imperfect_spatial(weights, spat, preset);

  CommandResult result;
  result.data = json{{"command", "purify"},
                     {"noise", to_string(noise)},
                     {"p", p},
                     {"spatial_fidelity", spatial_fidelity},
                     {"circuit_preset", preset},
                     {"input_weights", to_json(weights)},
                     {"report", to_json(report)}};

  std::ostringstream pretty;
  pretty << strf("one-step purification: %s noise p=%.3f, spatial fidelity %.3f, preset %s\n",
                 to_string(noise), p, spatial_fidelity, preset.c_str());
  pretty << strf("input weights (phi+,phi-,psi+,psi-): %.4f %.4f %.4f %.4f\n", weights.f1(),
                 weights.f2(), weights.f3(), weights.f4());
  for (size_t i = 0; i < report.outcomes.size(); ++i) {
    const auto& o = report.outcomes[i];
    if (report.per_pattern_fidelity[i]) {
      pretty << strf("  %s  p=%.6f  fidelity=%.6f\n", o.pattern.name().c_str(), o.probability,
                     *report.per_pattern_fidelity[i]);
    } else {
      pretty << strf("  %s  p=%.6f  fidelity=n/a\n", o.pattern.name().c_str(), o.probability);
    }
  }
  pretty << strf("success probability %.6f, aggregate fidelity %.6f\n",
                 report.total_success_prob, report.aggregate_fidelity);
  result.pretty = pretty.str();

  std::string csv = csv_line({"pattern", "probability", "fidelity"});
  for (size_t i = 0; i < report.outcomes.size(); ++i) {
    csv += csv_line({report.outcomes[i].pattern.name(),
                     strf("%.12g", report.outcomes[i].probability),
                     report.per_pattern_fidelity[i]
                         ? strf("%.12g", *report.per_pattern_fidelity[i])
                         : ""});
  }
  result.csv = csv;
  return result;
}

CommandResult cmd_densmat(const std::string& noise_preset_name, const std::string& stage,
                          double spatial_fidelity, const std::string& preset) {
  if (stage != "before" && stage != "after") {
    throw std::invalid_argument("densmat: stage must be 'before' or 'after'");
  }
  const NoisePreset& noise = noise_preset(noise_preset_name);
  const DensityMatrix before = noisy_pol_state(noise);
  DensityMatrix state = before;
  if (stage == "after") {
    const PurifyReport report = purify(
        HyperState::product(before, spatial_state_from_fidelity(spatial_fidelity)), preset);
    state = aggregate_after_state(report);
  }
  const double f = fidelity(state, bell_state(BellKind::PhiPlus));

  CommandResult result;
  result.data = json{{"command", "densmat"}, {"noise", noise.name},
                     {"stage", stage},       {"spatial_fidelity", spatial_fidelity},
                     {"circuit_preset", preset}, {"fidelity_vs_phi_plus", f},
                     {"state", to_json(state)}};

  std::ostringstream pretty;
  pretty << strf("polarization state, %s purification (%s), fidelity vs phi+ = %.6f\n",
                 stage.c_str(), noise.name.c_str(), f);
  pretty << "real part:\n";
  for (int r = 0; r < 4; ++r) {
    pretty << " ";
    for (int c = 0; c < 4; ++c) pretty << strf(" %8.4f", state(r, c).real());
    pretty << "\n";
  }
  pretty << "imaginary part:\n";
  for (int r = 0; r < 4; ++r) {
    pretty << " ";
    for (int c = 0; c < 4; ++c) pretty << strf(" %8.4f", state(r, c).imag());
    pretty << "\n";
  }
  result.pretty = pretty.str();

  std::string csv = csv_line({"row", "col", "re", "im"});
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      csv += csv_line({kPolBasis[r], kPolBasis[c], strf("%.12g", state(r, c).real()),
                       strf("%.12g", state(r, c).imag())});
  result.csv = csv;
  return result;
}

CommandResult cmd_schedule(const std::string& noise_preset_name) {
  const NoisePreset& preset = noise_preset(noise_preset_name);
  const PauliChannel ch = schedule_to_channel(preset.schedule);
  const BellDiagonal w = apply_to_bell_diagonal(BellDiagonal(1, 0, 0, 0), ch);

  CommandResult result;
  result.data = json{{"command", "schedule"},
                     {"preset", preset.name},
                     {"schedule", to_json(preset.schedule)},
                     {"channel", to_json(ch)},
                     {"before_fidelity", w.f1()}};
  result.pretty = strf(
      "%s duty cycle: t1=%gs t2=%gs t3=%gs t4=%gs\n"
      "channel (I, X, Y, Z): %.6f %.6f %.6f %.6f\n"
      "polarization fidelity after loading: %.6f\n",
      preset.name.c_str(), preset.schedule.t1, preset.schedule.t2, preset.schedule.t3,
      preset.schedule.t4, ch.p_i(), ch.p_x(), ch.p_y(), ch.p_z(), w.f1());
  result.csv = csv_line({"preset", "t1", "t2", "t3", "t4", "p_i", "p_x", "p_y", "p_z",
                         "before_fidelity"}) +
               csv_line({preset.name, strf("%.12g", preset.schedule.t1),
                         strf("%.12g", preset.schedule.t2), strf("%.12g", preset.schedule.t3),
                         strf("%.12g", preset.schedule.t4), strf("%.12g", ch.p_i()),
                         strf("%.12g", ch.p_x()), strf("%.12g", ch.p_y()),
                         strf("%.12g", ch.p_z()), strf("%.12g", w.f1())});
  return result;
}

CommandResult cmd_bbpssw(double f0, int rounds) {
  const std::vector<RecurrenceStep> steps = bbpssw_iterate(f0, rounds);

  json trajectory = json::array();
  std::ostringstream pretty;
  std::string csv =
      csv_line({"round", "f_in", "f_out", "success_prob", "cumulative_pairs"});
  pretty << strf("two-copy recurrence from isotropic f0=%.4f\n", f0);
  for (size_t i = 0; i < steps.size(); ++i) {
    const RecurrenceStep& s = steps[i];
    json step = to_json(s);
    step["round"] = i + 1;
    step["cumulative_pairs"] = pair_cost(static_cast<int>(i + 1));
    trajectory.push_back(std::move(step));
    pretty << strf("  round %zu: %.6f -> %.6f  (success %.6f, pairs %lld)\n", i + 1,
                   s.input.f1(), s.output.f1(), s.success_prob,
                   pair_cost(static_cast<int>(i + 1)));
    csv += csv_line({std::to_string(i + 1), strf("%.12g", s.input.f1()),
                     strf("%.12g", s.output.f1()), strf("%.12g", s.success_prob),
                     std::to_string(pair_cost(static_cast<int>(i + 1)))});
  }
  pretty << strf("final fidelity %.6f\n", steps.back().output.f1());

  CommandResult result;
  result.data = json{{"command", "bbpssw"},
                     {"f0", f0},
                     {"rounds", rounds},
                     {"trajectory", std::move(trajectory)},
                     {"final_fidelity", steps.back().output.f1()}};
  result.pretty = pretty.str();
  result.csv = csv;
  return result;
}

CommandResult cmd_efficiency(double ps, int copies) {
  const double ratio = efficiency_ratio(SpdcModel{ps, copies});
  CommandResult result;
  result.data =
      json{{"command", "efficiency"}, {"ps", ps}, {"copies", copies}, {"ratio", ratio}};
  result.pretty = strf(
      "per-attempt pair probability %g, %d copies needed by the two-copy scheme\n"
      "one-copy / multi-copy efficiency ratio: %.6g\n",
      ps, copies, ratio);
  result.csv = csv_line({"ps", "copies", "ratio"}) +
               csv_line({strf("%.12g", ps), std::to_string(copies), strf("%.12g", ratio)});
  return result;
}

CommandResult cmd_compare(double f0, double ps, int rounds, int copies) {
  if (f0 <= 0.0 || f0 > 1.0) throw std::invalid_argument("compare: f0 out of (0,1]");

  // One-step route: white noise with fraction 1 - f0, ideal spatial resource.
  const double p_white = 1.0 - f0;
  const BellDiagonal weights =
      apply_to_bell_diagonal(BellDiagonal(1, 0, 0, 0), white_channel(p_white));
  const PurifyReport one_step = purify_with_imperfect_spatial(
      weights, spatial_state_from_fidelity(1.0), "fig2c");

  const bool recurrence_purifiable = f0 > 0.5;
  json recurrence = json{{"purifiable", recurrence_purifiable}};
  std::ostringstream pretty;
  pretty << strf("input polarization fidelity f0=%.4f (white noise %.0f%%)\n", f0,
                 100.0 * p_white);
  pretty << strf("one-step: fidelity %.6f, success %.6f, 1 hyperentangled pair\n",
                 one_step.aggregate_fidelity, one_step.total_success_prob);

  std::string csv = csv_line({"method", "round", "fidelity", "success_prob", "pairs"});
  csv += csv_line({"one_step", "1", strf("%.12g", one_step.aggregate_fidelity),
                   strf("%.12g", one_step.total_success_prob), "1"});

  if (f0 > 0.25) {
    const std::vector<RecurrenceStep> steps = bbpssw_iterate(f0, rounds);
    json trajectory = json::array();
    for (size_t i = 0; i < steps.size(); ++i) {
      json step = to_json(steps[i]);
      step["round"] = i + 1;
      step["cumulative_pairs"] = pair_cost(static_cast<int>(i + 1));
      trajectory.push_back(std::move(step));
      csv += csv_line({"recurrence", std::to_string(i + 1),
                       strf("%.12g", steps[i].output.f1()),
                       strf("%.12g", steps[i].success_prob),
                       std::to_string(pair_cost(static_cast<int>(i + 1)))});
    }
    recurrence["trajectory"] = std::move(trajectory);
    recurrence["final_fidelity"] = steps.back().output.f1();
    recurrence["pairs"] = pair_cost(rounds);
    pretty << strf("recurrence: %d rounds -> fidelity %.6f, %lld pairs%s\n", rounds,
                   steps.back().output.f1(), pair_cost(rounds),
                   recurrence_purifiable ? "" : "  [not purifiable: f0 <= 1/2]");
  } else {
    pretty << "recurrence: not purifiable (f0 <= 1/4, the recurrence fixed point)\n";
  }

  const double ratio = efficiency_ratio(SpdcModel{ps, copies});
  pretty << strf("SPDC efficiency ratio (P_s=%g, %d copies): %.6g\n", ps, copies, ratio);
  csv += csv_line({"efficiency_ratio", "", strf("%.12g", ratio), "", ""});

  CommandResult result;
  result.data = json{{"command", "compare"},
                     {"f0", f0},
                     {"ps", ps},
                     {"rounds", rounds},
                     {"copies", copies},
                     {"one_step",
                      json{{"fidelity", one_step.aggregate_fidelity},
                           {"success_prob", one_step.total_success_prob},
                           {"pairs", 1}}},
                     {"recurrence", std::move(recurrence)},
                     {"efficiency_ratio", ratio}};
  result.pretty = pretty.str();
  result.csv = csv;
  return result;
}

CommandResult cmd_tomo(const TomoStateSelector& selector, const SamplingOptions& sampling) {
  if (selector.bell && selector.noise_preset_name) {
    throw std::invalid_argument("tomo: choose either a Bell state or a noise preset");
  }
  if (selector.dof != "pol" && selector.dof != "spat") {
    throw std::invalid_argument("tomo: dof must be 'pol' or 'spat'");
  }

  // Polarization state under test (before the optional spatial conversion).
  DensityMatrix pol = DensityMatrix::pure(bell_state(BellKind::PhiPlus));
  std::string state_label = "phi+";
  if (selector.bell) {
    BellKind kind;
    if (*selector.bell == "phi+") kind = BellKind::PhiPlus;
    else if (*selector.bell == "phi-") kind = BellKind::PhiMinus;
    else if (*selector.bell == "psi+") kind = BellKind::PsiPlus;
    else if (*selector.bell == "psi-") kind = BellKind::PsiMinus;
    else throw std::invalid_argument("tomo: unknown Bell state '" + *selector.bell + "'");
    pol = DensityMatrix::pure(bell_state(kind));
    state_label = *selector.bell;
  } else if (selector.noise_preset_name) {
    const NoisePreset& noise = noise_preset(*selector.noise_preset_name);
    state_label = noise.name + ":" + selector.stage;
    if (selector.stage == "before") {
      pol = noisy_pol_state(noise);
    } else if (selector.stage == "after") {
      const PurifyReport report = purify(
          HyperState::product(noisy_pol_state(noise),
                              spatial_state_from_fidelity(selector.spatial_fidelity)),
          selector.circuit_preset);
      pol = aggregate_after_state(report);
    } else {
      throw std::invalid_argument("tomo: stage must be 'before' or 'after'");
    }
  }

  DensityMatrix state = pol;
  if (selector.dof == "spat") {
    // Swap the spatial qubit pair into the polarization slots, then read the
    // polarization pair; this is how the spatial DOF is actually measured.
    const HyperState hyper =
        HyperState::product(pol, spatial_state_from_fidelity(selector.spatial_fidelity));
    const Circuit swap = spatial_measurement_map();
    const ComplexMatrix out = apply_local_maps(hyper.full().matrix(),
                                               compose(swap, Photon::A),
                                               compose(swap, Photon::B));
    state = partial_trace(DensityMatrix(out), {0, 2});
    state_label += " [spatial]";
  }

  const PureState target = bell_state(BellKind::PhiPlus);
  std::uint64_t stream = sampling.seed;
  std::array<double, 16> exps{};
  if (sampling.sampled) {
    exps = sampled_expectations(state, sampling.shots, splitmix64(stream));
  } else {
    exps = pauli_expectations(state);
  }
  const Reconstruction rec = reconstruct(exps, target);
  const double err = sampling.sampled
                         ? error_bar(state, target, sampling.shots, sampling.trials,
                                     splitmix64(stream))
                         : 0.0;

  static const char* kOps = "IXYZ";
  json jexps = json::object();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      jexps[std::string{kOps[i]} + kOps[j]] = exps[i * 4 + j];

  CommandResult result;
  result.data = json{{"command", "tomo"},
                     {"state", state_label},
                     {"dof", selector.dof},
                     {"mode", sampling.sampled ? "sampled" : "exact"},
                     {"expectations", std::move(jexps)},
                     {"rho", to_json(rec.rho)},
                     {"method", to_string(rec.method)},
                     {"fidelity", to_json(Estimate{rec.fidelity_vs_target, err})}};
  if (sampling.sampled) {
    result.data["shots"] = sampling.shots;
    result.data["trials"] = sampling.trials;
    result.data["seed"] = sampling.seed;
  }

  std::ostringstream pretty;
  pretty << strf("tomography of %s (%s mode)\n", state_label.c_str(),
                 sampling.sampled ? "sampled" : "exact");
  pretty << "expectations:\n";
  for (int i = 0; i < 4; ++i) {
    pretty << " ";
    for (int j = 0; j < 4; ++j)
      pretty << strf("  %c%c %+0.4f", kOps[i], kOps[j], exps[i * 4 + j]);
    pretty << "\n";
  }
  pretty << strf("reconstruction method: %s\n", to_string(rec.method));
  pretty << strf("fidelity vs phi+: %s\n",
                 fmt_meas(Estimate{rec.fidelity_vs_target, err}).c_str());
  result.pretty = pretty.str();

  std::string csv = csv_line({"kind", "a", "b", "value"});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      csv += csv_line({"expectation", std::string{kOps[i]}, std::string{kOps[j]},
                       strf("%.12g", exps[i * 4 + j])});
  csv += csv_line({"fidelity", "", "", strf("%.12g", rec.fidelity_vs_target)});
  csv += csv_line({"error_bar", "", "", strf("%.12g", err)});
  result.csv = csv;
  return result;
}

}  // namespace hyperpure::cli
