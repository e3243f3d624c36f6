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

#include <doctest.h>

#include "qextrap/serialization.hpp"

using namespace qextrap;

TEST_CASE("term sum round trip keeps exact keys") {
  const TermSum chain = build_heisenberg_chain(3, 5);
  const Json j = to_json(chain);
  CHECK(j.contains("n_qubits"));
  CHECK(j.contains("terms"));
  CHECK(j["terms"][0].contains("pauli"));
  CHECK(j["terms"][0].contains("coeff"));
  CHECK(j["terms"][0]["pauli"] == "XXI");

  const TermSum restored = term_sum_from_json(j);
  REQUIRE(restored.size() == chain.size());
  for (int g = 0; g < chain.size(); ++g) {
    CHECK((restored.term(g) - chain.term(g)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("dense terms round trip") {
  Matrix y(2, 2);
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  const TermSum terms(1, {y});
  const Json j = to_json(terms);
  CHECK(j["terms"][0].contains("dense_real"));
  CHECK(j["terms"][0].contains("dense_imag"));
  const TermSum restored = term_sum_from_json(j);
  CHECK((restored.term(0) - y).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("formula descriptor round trip and build") {
  const FormulaDescriptor descriptor{"suzuki", 2, 5};
  const Json j = to_json(descriptor);
  CHECK(j["kind"] == "suzuki");
  CHECK(j["k"] == 2);
  CHECK(j["gamma_count"] == 5);
  const FormulaDescriptor back = formula_descriptor_from_json(j);
  const StagedFormula formula = build_formula(back);
  CHECK(formula.order == 4);
  CHECK(formula.gamma_count() == 5);
  CHECK_THROWS_AS(build_formula(FormulaDescriptor{"strang", 0, 2}),
                  std::invalid_argument);
}

TEST_CASE("richardson plan json") {
  const RichardsonPlan plan = make_plan(3, 2, 2);
  const Json j = to_json(plan);
  CHECK(j["m"] == 3);
  CHECK(j["r_scale"] == 2);
  CHECK(j["eta"] == 2);
  CHECK(j["nodes"] == Json::array({42, 16, 10}));
  CHECK(j["weights"].size() == 3);
  const RichardsonPlan restored = richardson_plan_from_json(j);
  CHECK(restored.nodes == plan.nodes);
  for (int k = 0; k < 3; ++k) CHECK(restored.weights(k) == plan.weights(k));
}

TEST_CASE("interpolation plan json") {
  const InterpolationPlan plan = make_interpolation_plan(4, 0.05);
  const Json j = to_json(plan);
  CHECK(j["m"] == 4);
  CHECK(j["ell"] == 0.05);
  CHECK(j["raw_nodes"].size() == 4);
  CHECK(j["snapped_nodes"].size() == 4);
}

TEST_CASE("budget and resource report json") {
  const Json budget = to_json(make_budget(0.02, 1.5));
  CHECK(budget["eps_total"] == 0.02);
  CHECK(budget["eps_ext"] == 0.01);
  CHECK(budget["amplification"] == 1.5);

  const std::vector<long long> nodes = {5, 8, 21};
  const Json report = to_json(resource_report(nodes, 2));
  CHECK(report["d_max"] == 21);
  CHECK(report["c_trot"] == 68);
  CHECK(report["per_node"].size() == 3);
}

TEST_CASE("shortest double round trips") {
  for (double value : {0.1, 1.0 / 3.0, 6.02e23, -1.25e-7, 0.0}) {
    CHECK(std::stod(shortest_double(value)) == value);
  }
}
