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

#include <cmath>

#include "qextrap/experiments.hpp"

using namespace qextrap;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.experiment_id = "test";
  config.L = 3;
  config.seed = 9;
  config.times = {1.0};
  config.formula = FormulaDescriptor{"suzuki", 1, 0};
  config.method = ExperimentConfig::Method::kRichardson;
  config.m_values = {1, 2, 3};
  return config;
}

}  // namespace

TEST_CASE("config parsing with exact key names") {
  const Json j = Json::parse(R"({
    "experiment_id": "demo",
    "system": {"L": 4, "seed": 7},
    "time": [1.0, 2.0],
    "formula": {"kind": "suzuki", "k": 1, "gamma_count": 0},
    "method": "richardson",
    "m_values": [1, 2],
    "measurement": {"kind": "bounded_noise", "eps_data": 1e-6, "adversarial": true},
    "min_steps_rule": {"kind": "explicit", "r": 25},
    "output_path": "out.csv"
  })");
  const ExperimentConfig config = config_from_json(j);
  CHECK(config.L == 4);
  CHECK(config.seed == 7);
  CHECK(config.times == std::vector<double>{1.0, 2.0});
  CHECK(config.method == ExperimentConfig::Method::kRichardson);
  CHECK(config.measurement.kind == MeasurementSpec::Kind::kBoundedNoise);
  CHECK(config.measurement.adversarial);
  CHECK(config.min_steps_rule.explicit_r);
  CHECK(config.min_steps_rule.r == 25);
  CHECK(config.output_path == "out.csv");

  Json bad = j;
  bad["method"] = "magic";
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
  Json odd = j;
  odd["method"] = "interpolation";
  odd["m_values"] = {1, 2};
  CHECK_THROWS_AS(config_from_json(odd), std::invalid_argument);
}

TEST_CASE("m=1 extrapolated error equals the plain error") {
  ExperimentConfig config = small_config();
  config.m_values = {1};
  const auto rows = run_error_vs_m(config, 1.0);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].err_extrapolated == rows[0].err_plain);
}

TEST_CASE("errors decrease with m under exact measurements") {
  const auto rows = run_error_vs_m(small_config(), 1.0);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].err_extrapolated < rows[0].err_extrapolated);
  CHECK(rows[2].err_extrapolated < rows[1].err_extrapolated);
  for (const auto& row : rows) {
    CHECK(row.err_extrapolated <= row.err_plain * (1 + 1e-9));
    CHECK(row.d_max >= 1);
    CHECK(row.c_trot >= row.d_max);
  }
}

TEST_CASE("adversarial noise plateaus at the amplification level") {
  ExperimentConfig config = small_config();
  config.measurement.kind = MeasurementSpec::Kind::kBoundedNoise;
  config.measurement.eps_data = 1e-6;
  config.measurement.adversarial = true;
  const auto rows = run_error_vs_m(config, 1.0);
  for (const auto& row : rows) {
    CHECK(row.err_extrapolated >= 1e-6 * (1 - 1e-9));
  }
}

TEST_CASE("multi-T runs grow with T at fixed depth and vanish at T=0") {
  ExperimentConfig config = small_config();
  config.m_values = {2};
  config.times = {0.0, 1.0, 2.0, 4.0};
  // Fixed depth across times; the adaptive (Lambda T)^{3/2} rule would deepen
  // the circuits at larger T and mask the time dependence of the error.
  config.min_steps_rule.explicit_r = true;
  config.min_steps_rule.r = 40;
  const auto rows = run_error_vs_m_multi_T(config);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].err_extrapolated <= 1e-12);
  CHECK(rows[0].err_plain <= 1e-12);
  CHECK(rows[1].err_extrapolated < rows[2].err_extrapolated);
  CHECK(rows[2].err_extrapolated < rows[3].err_extrapolated);
}

TEST_CASE("interpolation method produces finite rows") {
  ExperimentConfig config = small_config();
  config.method = ExperimentConfig::Method::kInterpolation;
  config.m_values = {4, 6};
  const auto rows = run_error_vs_m(config, 0.5);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(std::isfinite(row.err_extrapolated));
    CHECK(row.err_extrapolated < 1e-2);
    CHECK(row.method == "interpolation");
  }
}

TEST_CASE("runs are deterministic byte for byte") {
  ExperimentConfig config = small_config();
  config.measurement.kind = MeasurementSpec::Kind::kIncoherent;
  config.measurement.n_samples = 200;
  const std::string a = rows_to_csv(run_error_vs_m_multi_T(config));
  const std::string b = rows_to_csv(run_error_vs_m_multi_T(config));
  CHECK(a == b);
  ExperimentConfig threaded = config;
  threaded.threads = 4;
  CHECK(rows_to_csv(run_error_vs_m_multi_T(threaded)) == a);
}

TEST_CASE("csv format") {
  ExperimentConfig config = small_config();
  config.m_values = {1};
  const std::string csv = rows_to_csv(run_error_vs_m(config, 1.0));
  CHECK(csv.rfind("experiment_id,T,m,d_max,c_trot,err_extrapolated,err_plain,"
                  "method,measurement\n",
                  0) == 0);
  CHECK(csv.find("test,1,1,") != std::string::npos);
  CHECK(csv.find(",richardson,exact\n") != std::string::npos);
}

TEST_CASE("incoherent sample counts follow the budget when not explicit") {
  ExperimentConfig config = small_config();
  config.m_values = {2};
  config.measurement.kind = MeasurementSpec::Kind::kIncoherent;
  config.measurement.eps_data = 0.05;
  config.measurement.delta = 0.02;
  const auto rows = run_error_vs_m(config, 1.0);
  // c_trot = N * sum(nodes) with N = hoeffding(eps, delta/m).
  const long long n = hoeffding_samples(0.05, 0.01);
  CHECK(rows[0].c_trot % n == 0);
}
