// Copyright 2026 The qextrap authors
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

#include "qextrap/serialization.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace qextrap {

namespace {

Json dense_to_json(const Matrix& m) {
  Json real = Json::array();
  Json imag = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json real_row = Json::array();
    Json imag_row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      real_row.push_back(m(i, j).real());
      imag_row.push_back(m(i, j).imag());
    }
    real.push_back(std::move(real_row));
    imag.push_back(std::move(imag_row));
  }
  return Json{{"dense_real", std::move(real)}, {"dense_imag", std::move(imag)}};
}

Matrix dense_from_json(const Json& j) {
  const auto& real = j.at("dense_real");
  const auto& imag = j.at("dense_imag");
  const auto rows = static_cast<Eigen::Index>(real.size());
  if (rows == 0) throw std::invalid_argument("empty dense term");
  const auto cols = static_cast<Eigen::Index>(real.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = Complex(real.at(r).at(c).get<double>(), imag.at(r).at(c).get<double>());
    }
  }
  return m;
}

}  // namespace

Json to_json(const TermSum& terms) {
  Json out;
  out["n_qubits"] = terms.n_qubits();
  Json list = Json::array();
  for (int g = 0; g < terms.size(); ++g) {
    if (terms.pauli(g).has_value()) {
      const PauliString& p = *terms.pauli(g);
      list.push_back(Json{{"pauli", p.axes}, {"coeff", p.coefficient}});
    } else {
      list.push_back(dense_to_json(terms.term(g)));
    }
  }
  out["terms"] = std::move(list);
  return out;
}

TermSum term_sum_from_json(const Json& j) {
  const int n_qubits = j.at("n_qubits").get<int>();
  std::vector<PauliString> paulis;
  std::vector<Matrix> dense;
  bool any_dense = false;
  for (const auto& entry : j.at("terms")) {
    if (entry.contains("pauli")) {
      PauliString p;
      p.n_qubits = n_qubits;
      p.axes = entry.at("pauli").get<std::string>();
      p.coefficient = entry.at("coeff").get<double>();
      paulis.push_back(std::move(p));
      dense.emplace_back();
    } else {
      any_dense = true;
      dense.push_back(dense_from_json(entry));
      paulis.emplace_back();
    }
  }
  if (!any_dense) {
    return TermSum::from_paulis(n_qubits, std::move(paulis));
  }
  // Mixed form falls back to dense for all terms.
  std::vector<Matrix> all;
  all.reserve(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    all.push_back(dense[i].size() != 0 ? std::move(dense[i]) : paulis[i].dense());
  }
  return TermSum(n_qubits, std::move(all));
}

Json to_json(const FormulaDescriptor& descriptor) {
  return Json{{"kind", descriptor.kind},
              {"k", descriptor.k},
              {"gamma_count", descriptor.gamma_count}};
}

FormulaDescriptor formula_descriptor_from_json(const Json& j) {
  FormulaDescriptor d;
  d.kind = j.at("kind").get<std::string>();
  d.k = j.value("k", 0);
  d.gamma_count = j.at("gamma_count").get<int>();
  return d;
}

StagedFormula build_formula(const FormulaDescriptor& descriptor) {
  if (descriptor.kind == "first_order") return first_order(descriptor.gamma_count);
  if (descriptor.kind == "suzuki") return suzuki(descriptor.k, descriptor.gamma_count);
  throw std::invalid_argument("unknown formula kind: " + descriptor.kind);
}

Json to_json(const RichardsonPlan& plan) {
  Json out;
  out["m"] = plan.m;
  out["r_scale"] = plan.r_scale;
  out["eta"] = plan.eta;
  out["nodes"] = plan.nodes;
  out["weights"] = std::vector<double>(plan.weights.data(),
                                       plan.weights.data() + plan.weights.size());
  return out;
}

RichardsonPlan richardson_plan_from_json(const Json& j) {
  return make_plan(j.at("m").get<int>(), j.at("r_scale").get<long long>(),
                   j.at("eta").get<int>());
}

Json to_json(const InterpolationPlan& plan) {
  return Json{{"m", plan.m},
              {"ell", plan.ell},
              {"raw_nodes", plan.raw_nodes},
              {"snapped_nodes", plan.snapped_nodes}};
}

Json to_json(const ErrorBudget& budget) {
  return Json{{"eps_total", budget.eps_total},
              {"eps_ext", budget.eps_ext},
              {"eps_data", budget.eps_data},
              {"amplification", budget.amplification}};
}

Json to_json(const ResourceReport& report) {
  Json per_node = Json::array();
  for (const auto& [node, reps] : report.per_node) {
    per_node.push_back(Json{{"r_k", node}, {"repetitions", reps}});
  }
  return Json{{"d_max", report.d_max},
              {"c_trot", report.c_trot},
              {"per_node", std::move(per_node)}};
}

Json to_json(const StructureCheckReport& report) {
  return Json{{"pass", report.pass},
              {"inconclusive", report.inconclusive},
              {"s1_exponent", report.s1_exponent},
              {"s2_exponent", report.s2_exponent},
              {"threshold", report.threshold},
              {"T_grid", report.T_grid},
              {"s1_norms", report.s1_norms},
              {"s2_norms", report.s2_norms},
              {"max_fit_condition", report.max_fit_condition},
              {"max_fit_residual", report.max_fit_residual},
              {"note", report.note}};
}

Json to_json(const HeffConsistencyReport& report) {
  return Json{{"pass", report.pass},
              {"fitted_norms", report.fitted_norms},
              {"bounds", report.bounds}};
}

std::string shortest_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buffer, end);
}

}  // namespace qextrap
