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

#include <cstdint>
#include <string>
#include <vector>

#include "qextrap/serialization.hpp"

namespace qextrap {

struct MeasurementSpec {
  enum class Kind { kExact, kIncoherent, kBoundedNoise };
  Kind kind = Kind::kExact;
  double eps_data = 0.0;
  double delta = 0.01;
  long long n_samples = 0;   // incoherent: 0 derives N from (eps_data, delta/m)
  bool adversarial = false;  // bounded noise: worst-case sign pattern

  std::string label() const;
};

struct MinStepsRule {
  bool explicit_r = false;  // default: r = ceil((Lambda T)^{3/2})
  long long r = 1;
};

struct ExperimentConfig {
  std::string experiment_id = "experiment";
  int L = 6;
  std::uint64_t seed = 1;
  std::vector<double> times = {1.0};
  FormulaDescriptor formula{"suzuki", 1, 0};  // gamma_count filled from the chain
  enum class Method { kRichardson, kInterpolation };
  Method method = Method::kRichardson;
  std::vector<int> m_values = {1, 2, 3, 4, 5};
  MeasurementSpec measurement;
  MinStepsRule min_steps_rule;
  std::string output_path;
  int threads = 1;
};

ExperimentConfig config_from_json(const Json& j);

struct ExperimentRow {
  std::string experiment_id;
  double T = 0.0;
  int m = 0;
  long long d_max = 0;
  long long c_trot = 0;
  double err_extrapolated = 0.0;
  double err_plain = 0.0;
  std::string method;
  std::string measurement;
};

/// One extrapolation-vs-depth study at a single simulation time: per m, build
/// the plan (Richardson nodes rescaled to honor the min-steps rule, or
/// snapped Chebyshev nodes), evaluate f at every node under the configured
/// measurement model, extrapolate/interpolate, and record the error next to
/// the unextrapolated error at equal maximum depth.
std::vector<ExperimentRow> run_error_vs_m(const ExperimentConfig& config, double T);

/// run_error_vs_m looped over the configured list of times.
std::vector<ExperimentRow> run_error_vs_m_multi_T(const ExperimentConfig& config);

/// CSV with header experiment_id,T,m,d_max,c_trot,err_extrapolated,err_plain,
/// method,measurement; floats in shortest round-trip form.
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace qextrap
