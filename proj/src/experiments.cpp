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

#include "qextrap/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "qextrap/chebyshev.hpp"
#include "qextrap/evolution.hpp"
#include "qextrap/measurement.hpp"
#include "qextrap/richardson.hpp"
#include "qextrap/rng.hpp"

namespace qextrap {

std::string MeasurementSpec::label() const {
  switch (kind) {
    case Kind::kExact:
      return "exact";
    case Kind::kIncoherent:
      if (n_samples > 0) return "incoherent(N=" + std::to_string(n_samples) + ")";
      return "incoherent(eps_data=" + shortest_double(eps_data) +
             ";delta=" + shortest_double(delta) + ")";
    case Kind::kBoundedNoise:
      return std::string(adversarial ? "adversarial_noise(" : "bounded_noise(") +
             shortest_double(eps_data) + ")";
  }
  return "unknown";
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig config;
  config.experiment_id = j.value("experiment_id", std::string("experiment"));
  const auto& system = j.at("system");
  config.L = system.at("L").get<int>();
  config.seed = system.at("seed").get<std::uint64_t>();
  const auto& time = j.at("time");
  config.times.clear();
  if (time.is_array()) {
    for (const auto& t : time) config.times.push_back(t.get<double>());
  } else {
    config.times.push_back(time.get<double>());
  }
  config.formula = formula_descriptor_from_json(j.at("formula"));
  const std::string method = j.at("method").get<std::string>();
  if (method == "richardson") {
    config.method = ExperimentConfig::Method::kRichardson;
  } else if (method == "interpolation") {
    config.method = ExperimentConfig::Method::kInterpolation;
  } else {
    throw std::invalid_argument("method must be richardson or interpolation");
  }
  config.m_values = j.at("m_values").get<std::vector<int>>();
  if (config.m_values.empty()) {
    throw std::invalid_argument("m_values must be nonempty");
  }
  if (config.method == ExperimentConfig::Method::kInterpolation) {
    for (int m : config.m_values) {
      if (m % 2 != 0) {
        throw std::invalid_argument("interpolation m_values must be even");
      }
    }
  }
  const auto& measurement = j.at("measurement");
  const std::string kind = measurement.at("kind").get<std::string>();
  if (kind == "exact") {
    config.measurement.kind = MeasurementSpec::Kind::kExact;
  } else if (kind == "incoherent") {
    config.measurement.kind = MeasurementSpec::Kind::kIncoherent;
    config.measurement.n_samples = measurement.value("N", 0LL);
    config.measurement.eps_data = measurement.value("eps_data", 0.0);
    config.measurement.delta = measurement.value("delta", 0.01);
    if (config.measurement.n_samples <= 0 && config.measurement.eps_data <= 0) {
      throw std::invalid_argument("incoherent measurement needs N or eps_data");
    }
  } else if (kind == "bounded_noise") {
    config.measurement.kind = MeasurementSpec::Kind::kBoundedNoise;
    config.measurement.eps_data = measurement.at("eps_data").get<double>();
    config.measurement.adversarial = measurement.value("adversarial", false);
  } else {
    throw std::invalid_argument("unknown measurement kind: " + kind);
  }
  if (j.contains("min_steps_rule")) {
    const auto& rule = j.at("min_steps_rule");
    const std::string rule_kind = rule.at("kind").get<std::string>();
    if (rule_kind == "explicit") {
      config.min_steps_rule.explicit_r = true;
      config.min_steps_rule.r = rule.at("r").get<long long>();
    } else if (rule_kind != "lambda_power") {
      throw std::invalid_argument("min_steps_rule kind must be explicit or lambda_power");
    }
  }
  config.output_path = j.value("output_path", std::string());
  config.threads = j.value("threads", 1);
  return config;
}

namespace {

struct StudyContext {
  TermSum terms;
  StagedFormula formula;
  StateVector state;
  Observable observable;
  double lambda_sum = 0.0;  // sum of term norms, the Lambda of the depth rule
};

StudyContext build_context(const ExperimentConfig& config) {
  TermSum terms = build_heisenberg_chain(config.L, config.seed);
  FormulaDescriptor descriptor = config.formula;
  descriptor.gamma_count = terms.size();
  StagedFormula formula = build_formula(descriptor);
  const SplitMix64 master(config.seed);
  StateVector state =
      random_bitstring_state(config.L, master.child("initial-state").state());
  Observable observable = random_pauli_observable(
      config.L, 3, master.child("observable").state());
  const double lambda_sum = sum_of_term_norms(terms);
  return StudyContext{std::move(terms), std::move(formula), std::move(state),
                      std::move(observable), lambda_sum};
}

long long min_steps_for(const ExperimentConfig& config, const StudyContext& ctx,
                        double T) {
  if (config.min_steps_rule.explicit_r) return std::max<long long>(1, config.min_steps_rule.r);
  return std::max<long long>(
      1, static_cast<long long>(std::ceil(std::pow(ctx.lambda_sum * T, 1.5))));
}

// Evaluates f at the given signed nodes under the configured measurement
// model, fanning node evaluations over threads; results land by index.
std::vector<double> evaluate_nodes(const ExperimentConfig& config,
                                   const StudyContext& ctx, double T,
                                   const std::vector<long long>& nodes,
                                   long long samples_per_node,
                                   std::uint64_t stream_index) {
  std::vector<double> values(nodes.size());
  const auto evaluate = [&](std::size_t i) {
    const long long r = nodes[i];
    switch (config.measurement.kind) {
      case MeasurementSpec::Kind::kExact:
      case MeasurementSpec::Kind::kBoundedNoise: {
        // Adversarial and uniform noise are applied after the plan weights
        // are known; raw exact values are produced here.
        values[i] = trotter_expectation(ctx.formula, ctx.terms, r, T, ctx.state,
                                        ctx.observable);
        break;
      }
      case MeasurementSpec::Kind::kIncoherent: {
        const StateVector evolved =
            trotter_evolve(ctx.formula, ctx.terms, r, T, ctx.state);
        const std::uint64_t seed =
            SplitMix64(config.seed)
                .child("node-measurement", stream_index * 1024 + i)
                .state();
        values[i] = simulate_incoherent(ctx.observable, evolved, samples_per_node, seed);
        break;
      }
    }
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1 || nodes.size() <= 1) {
    for (std::size_t i = 0; i < nodes.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(nodes.size()));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < nodes.size();
             i = next.fetch_add(1)) {
          evaluate(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return values;
}

// Applies the bounded-noise model on top of exact values. The adversarial
// pattern aligns with the combination weights and pushes away from the exact
// answer, which attains the |b|_1 (or Lebesgue) amplification bound exactly.
void apply_bounded_noise(const ExperimentConfig& config, std::vector<double>& values,
                         const std::vector<double>& combination_weights,
                         double extrapolated_minus_exact,
                         std::uint64_t stream_index) {
  if (config.measurement.kind != MeasurementSpec::Kind::kBoundedNoise) return;
  const double eps = config.measurement.eps_data;
  if (config.measurement.adversarial) {
    const double direction = extrapolated_minus_exact >= 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double sign = combination_weights[i] >= 0.0 ? 1.0 : -1.0;
      values[i] = adversarial_eval(values[i], eps, sign * direction);
    }
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = simulate_noisy_eval(
          values[i], eps,
          SplitMix64(config.seed).child("noise", stream_index * 1024 + i).state());
    }
  }
}

}  // namespace

std::vector<ExperimentRow> run_error_vs_m(const ExperimentConfig& config, double T) {
  const StudyContext ctx = build_context(config);
  const double exact = exact_evolve_expectation(ctx.terms, T, ctx.state, ctx.observable);
  const long long min_steps = min_steps_for(config, ctx, T);

  std::vector<ExperimentRow> rows;
  rows.reserve(config.m_values.size());
  for (std::size_t m_index = 0; m_index < config.m_values.size(); ++m_index) {
    const int m = config.m_values[m_index];
    const std::uint64_t stream_index =
        m_index + 1024 * static_cast<std::uint64_t>(T * 1e6);

    std::vector<long long> nodes;
    std::vector<double> combination_weights;
    std::vector<long long> depths;  // circuit depths, |r|
    double estimate = 0.0;
    std::vector<double> values;

    if (config.method == ExperimentConfig::Method::kRichardson) {
      const long long r_scale = choose_r_scale(m, min_steps);
      const RichardsonPlan plan = make_plan(m, r_scale, ctx.formula.symmetry);
      nodes = plan.nodes;
      depths = plan.nodes;
      combination_weights.assign(plan.weights.data(), plan.weights.data() + plan.m);
      long long samples = config.measurement.n_samples;
      if (config.measurement.kind == MeasurementSpec::Kind::kIncoherent && samples <= 0) {
        samples = hoeffding_samples(config.measurement.eps_data,
                                    config.measurement.delta / m);
      }
      values = evaluate_nodes(config, ctx, T, nodes, samples, stream_index);
      if (config.measurement.kind == MeasurementSpec::Kind::kBoundedNoise) {
        const double exact_extrapolated = extrapolate(plan, values);
        apply_bounded_noise(config, values, combination_weights,
                            exact_extrapolated - exact, stream_index);
      }
      estimate = extrapolate(plan, values);
    } else {
      // lambda enters through its proven bound 4 sum_g |H_g|.
      const double lambda = 4.0 * ctx.lambda_sum;
      double ell = 1.0 / static_cast<double>(min_steps);
      if (T > 0.0 && lambda > 0.0) {
        ell = std::min(ell, choose_ell_snapped(ctx.formula.a_max, ctx.formula.stages,
                                               lambda, T, ctx.formula.order, m));
      }
      ell = std::min(ell, 0.5);
      const InterpolationPlan plan = make_interpolation_plan(m, ell);
      nodes = plan.snapped_nodes;
      depths.reserve(nodes.size());
      for (long long r : nodes) depths.push_back(std::llabs(r));
      std::vector<double> s_values;
      s_values.reserve(nodes.size());
      for (long long r : nodes) s_values.push_back(1.0 / static_cast<double>(r));
      combination_weights = lagrange_at_zero(s_values);
      long long samples = config.measurement.n_samples;
      if (config.measurement.kind == MeasurementSpec::Kind::kIncoherent && samples <= 0) {
        samples = hoeffding_samples(config.measurement.eps_data,
                                    config.measurement.delta / m);
      }
      values = evaluate_nodes(config, ctx, T, nodes, samples, stream_index);
      if (config.measurement.kind == MeasurementSpec::Kind::kBoundedNoise) {
        const double exact_interpolated = interpolate_at_zero(s_values, values);
        apply_bounded_noise(config, values, combination_weights,
                            exact_interpolated - exact, stream_index);
      }
      estimate = interpolate_at_zero(s_values, values);
    }

    // Unextrapolated reference: a single measured evaluation at the deepest
    // circuit of the plan, under the same measurement model.
    const long long deepest = *std::max_element(depths.begin(), depths.end());
    long long samples = config.measurement.n_samples;
    if (config.measurement.kind == MeasurementSpec::Kind::kIncoherent && samples <= 0) {
      samples = hoeffding_samples(config.measurement.eps_data,
                                  config.measurement.delta / m);
    }
    std::vector<double> plain = evaluate_nodes(config, ctx, T, {deepest}, samples,
                                               stream_index + 512);
    if (config.measurement.kind == MeasurementSpec::Kind::kBoundedNoise) {
      apply_bounded_noise(config, plain, {1.0}, plain[0] - exact, stream_index + 512);
    }

    ExperimentRow row;
    row.experiment_id = config.experiment_id;
    row.T = T;
    row.m = m;
    const long long repetitions =
        config.measurement.kind == MeasurementSpec::Kind::kIncoherent ? samples : 1;
    const ResourceReport resources = resource_report(depths, repetitions);
    row.d_max = resources.d_max;
    row.c_trot = resources.c_trot;
    row.err_extrapolated = std::abs(estimate - exact);
    row.err_plain = std::abs(plain[0] - exact);
    row.method = config.method == ExperimentConfig::Method::kRichardson
                     ? "richardson"
                     : "interpolation";
    row.measurement = config.measurement.label();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ExperimentRow> run_error_vs_m_multi_T(const ExperimentConfig& config) {
  std::vector<ExperimentRow> rows;
  for (double T : config.times) {
    auto batch = run_error_vs_m(config, T);
    rows.insert(rows.end(), batch.begin(), batch.end());
  }
  return rows;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::string csv =
      "experiment_id,T,m,d_max,c_trot,err_extrapolated,err_plain,method,measurement\n";
  for (const auto& row : rows) {
    csv += row.experiment_id;
    csv += ',';
    csv += shortest_double(row.T);
    csv += ',';
    csv += std::to_string(row.m);
    csv += ',';
    csv += std::to_string(row.d_max);
    csv += ',';
    csv += std::to_string(row.c_trot);
    csv += ',';
    csv += shortest_double(row.err_extrapolated);
    csv += ',';
    csv += shortest_double(row.err_plain);
    csv += ',';
    csv += row.method;
    csv += ',';
    csv += row.measurement;
    csv += '\n';
  }
  return csv;
}

}  // namespace qextrap
