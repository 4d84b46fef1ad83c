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

#include "hyperpure/matrix_json.hpp"

#include <stdexcept>

namespace hyperpure {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix_to_json: expected a square matrix");
  }
  json re = json::array();
  json im = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != dim * dim || static_cast<int>(im.size()) != dim * dim) {
    throw std::invalid_argument("matrix_from_json: entry count does not match dim");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = Complex(re[r * dim + c].get<double>(), im[r * dim + c].get<double>());
  return m;
}

json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

DensityMatrix density_from_json(const json& j) { return DensityMatrix(matrix_from_json(j)); }

json to_json(const BellDiagonal& w) {
  return json{{"f1", w.f1()}, {"f2", w.f2()}, {"f3", w.f3()}, {"f4", w.f4()}};
}

json to_json(const PauliChannel& ch) {
  return json{{"p_i", ch.p_i()}, {"p_x", ch.p_x()}, {"p_y", ch.p_y()}, {"p_z", ch.p_z()}};
}

json to_json(const LcSchedule& s) {
  return json{{"t1", s.t1}, {"t2", s.t2}, {"t3", s.t3}, {"t4", s.t4}};
}

LcSchedule schedule_from_json(const json& j) {
  LcSchedule s;
  s.t1 = j.at("t1").get<double>();
  s.t2 = j.at("t2").get<double>();
  s.t3 = j.at("t3").get<double>();
  s.t4 = j.at("t4").get<double>();
  for (const auto& [key, value] : j.items()) {
    if (key != "t1" && key != "t2" && key != "t3" && key != "t4") {
      throw std::invalid_argument("schedule_from_json: unknown key '" + key + "'");
    }
    (void)value;
  }
  return s;
}

json to_json(const CoincidenceOutcome& outcome) {
  json j{{"pattern", outcome.pattern.name()}, {"probability", outcome.probability}};
  if (outcome.conditional_pol) {
    j["conditional_pol"] = to_json(*outcome.conditional_pol);
  } else {
    j["conditional_pol"] = nullptr;
  }
  return j;
}

json to_json(const PurifyReport& report) {
  json outcomes = json::array();
  for (const auto& o : report.outcomes) outcomes.push_back(to_json(o));
  json fids = json::object();
  for (size_t i = 0; i < accepted_patterns().size(); ++i) {
    const auto& f = report.per_pattern_fidelity[i];
    fids[accepted_patterns()[i].name()] = f ? json(*f) : json(nullptr);
  }
  return json{{"outcomes", std::move(outcomes)},
              {"total_success_prob", report.total_success_prob},
              {"per_pattern_fidelity", std::move(fids)},
              {"aggregate_fidelity", report.aggregate_fidelity}};
}

json to_json(const RecurrenceStep& step) {
  return json{{"input", to_json(step.input)},
              {"output", to_json(step.output)},
              {"success_prob", step.success_prob}};
}

}  // namespace hyperpure
