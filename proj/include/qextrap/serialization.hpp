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

#pragma once

#include <string>

#include <json.hpp>

#include "qextrap/chebyshev.hpp"
#include "qextrap/measurement.hpp"
#include "qextrap/oracles.hpp"
#include "qextrap/richardson.hpp"
#include "qextrap/term_algebra.hpp"

namespace qextrap {

using Json = nlohmann::json;

// TermSum: { "n_qubits": int, "terms": [ {"pauli": "XZIY...", "coeff": f}
//            | {"dense_real": [[..]], "dense_imag": [[..]]} ] }
Json to_json(const TermSum& terms);
TermSum term_sum_from_json(const Json& j);

// Formula descriptor: { "kind": "first_order" | "suzuki", "k": int,
//                       "gamma_count": int }
struct FormulaDescriptor {
  std::string kind = "first_order";
  int k = 0;
  int gamma_count = 0;
};
Json to_json(const FormulaDescriptor& descriptor);
FormulaDescriptor formula_descriptor_from_json(const Json& j);
StagedFormula build_formula(const FormulaDescriptor& descriptor);

// RichardsonPlan: { "m", "r_scale", "eta", "nodes": [int], "weights": [f] }
Json to_json(const RichardsonPlan& plan);
RichardsonPlan richardson_plan_from_json(const Json& j);

// InterpolationPlan: { "m", "ell", "raw_nodes": [f], "snapped_nodes": [int] }
Json to_json(const InterpolationPlan& plan);

// ErrorBudget / ResourceReport serialize with field names as declared.
Json to_json(const ErrorBudget& budget);
Json to_json(const ResourceReport& report);

Json to_json(const StructureCheckReport& report);
Json to_json(const HeffConsistencyReport& report);

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string shortest_double(double value);

}  // namespace qextrap
