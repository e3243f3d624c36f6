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

#include "qextrap/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qextrap/chebyshev.hpp"
#include "qextrap/evolution.hpp"
#include "qextrap/experiments.hpp"
#include "qextrap/measurement.hpp"
#include "qextrap/oracles.hpp"
#include "qextrap/product_formula.hpp"
#include "qextrap/richardson.hpp"
#include "qextrap/rng.hpp"
#include "qextrap/term_algebra.hpp"

namespace qextrap {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details << "FAILED: " << what << "; ";
    }
  }

  void note(const std::string& what) { details << what << "; "; }
};

Matrix random_hermitian(Eigen::Index dim, SplitMix64& rng, double scale) {
  Matrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
    }
  }
  return 0.5 * (a + a.adjoint().eval());
}

// Entry scale keeps the S4 error above the 1e-15 unitary-difference floor
// over the whole slope-check window.
TermSum two_qubit_two_term(std::uint64_t seed) {
  SplitMix64 rng = SplitMix64(seed).child("order-check-hamiltonian");
  std::vector<Matrix> terms;
  terms.push_back(random_hermitian(4, rng, 4.0));
  terms.push_back(random_hermitian(4, rng, 4.0));
  return TermSum(2, std::move(terms));
}

TermSum xz_pair() {
  Matrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  return TermSum(1, {x, z});
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> symmetric_grid(double lo, double hi, int points_per_side) {
  std::vector<double> grid;
  for (int i = points_per_side; i >= 1; --i) {
    grid.push_back(-(lo + (hi - lo) * (i - 1) / (points_per_side - 1.0)));
  }
  for (int i = 1; i <= points_per_side; ++i) {
    grid.push_back(lo + (hi - lo) * (i - 1) / (points_per_side - 1.0));
  }
  return grid;
}

Matrix exact_unitary(const TermSum& terms, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(terms.total());
  return solver.eigenvectors() *
         (Complex(0, -t) * solver.eigenvalues().cast<Complex>().array())
             .exp()
             .matrix()
             .asDiagonal() *
         solver.eigenvectors().adjoint();
}

Verdict criterion_order_of_accuracy(const AcceptanceOptions& options) {
  Check check;
  const TermSum terms = two_qubit_two_term(options.seed);
  struct Case {
    const char* name;
    StagedFormula formula;
    int p;
  };
  const std::vector<Case> cases = {{"P1", first_order(2), 1},
                                   {"S2", suzuki(1, 2), 2},
                                   {"S4", suzuki(2, 2), 4}};
  std::vector<double> t_grid;
  for (int i = 0; i < 8; ++i) t_grid.push_back(1e-3 * std::pow(10.0, i / 7.0));
  for (const auto& c : cases) {
    std::vector<double> errors;
    for (double t : t_grid) {
      errors.push_back(
          spectral_norm(unitary(c.formula, terms, t) - exact_unitary(terms, t)));
    }
    const double slope = loglog_slope(t_grid, errors);
    std::ostringstream line;
    line << c.name << " slope " << slope << " target " << c.p + 1;
    check.note(line.str());
    check.require(std::abs(slope - (c.p + 1)) <= 0.15, line.str());
  }
  return Verdict{1, "order of accuracy (P1, S2, S4)", check.pass, check.details.str()};
}

Verdict criterion_bch_bounds(const AcceptanceOptions&) {
  Check check;
  const TermSum terms = xz_pair();
  const std::vector<double> grid = symmetric_grid(0.005, 0.05, 10);

  const auto p1_fit = bch_error_operators(first_order(2), terms, 6, grid);
  const StagedFormula p1 = first_order(2);
  for (int j = 2; j <= 4; ++j) {
    const double fitted = spectral_norm(p1_fit[static_cast<std::size_t>(j - 2)]);
    const double alpha = alpha_comm(terms, j, CommutatorMode::kExact);
    const double bound =
        std::pow(p1.a_max * p1.stages, j) * alpha / (static_cast<double>(j) * j);
    std::ostringstream line;
    line << "P1 |E_" << j << "| " << fitted << " bound " << bound;
    check.note(line.str());
    check.require(fitted <= bound * (1.0 + 1e-6), line.str());
  }

  const auto s2_fit = bch_error_operators(suzuki(1, 2), terms, 4, grid);
  const double e2 = spectral_norm(s2_fit[0]);
  const double e4 = spectral_norm(s2_fit[2]);
  check.note("S2 |E_2| " + shortest_double(e2) + " |E_4| " + shortest_double(e4));
  check.require(e2 <= 1e-8, "S2 fitted |E_2| <= 1e-8");
  check.require(e4 <= 1e-8, "S2 fitted odd-j coefficient |E_4| <= 1e-8");
  return Verdict{2, "BCH error-operator bounds", check.pass, check.details.str()};
}

Verdict criterion_richardson_plan(const AcceptanceOptions&) {
  Check check;
  const RichardsonPlan m3 = make_plan(3, 1, 2);
  check.require(m3.nodes == std::vector<long long>{21, 8, 5},
                "m=3 nodes equal [21, 8, 5]");
  double norm4 = 0.0, norm32 = 0.0;
  for (int m = 1; m <= 32; ++m) {
    const RichardsonPlan plan = make_plan(m, 1, 2);
    check.require(std::abs(plan.weights.sum() - 1.0) <= 1e-10,
                  "sum b = 1 at m=" + std::to_string(m));
    double residual = 0.0;
    for (int j = 1; j <= m; ++j) {
      double row = 0.0;
      for (int k = 0; k < m; ++k) {
        row += plan.weights(k) *
               std::pow(1.0 / static_cast<double>(plan.nodes[static_cast<std::size_t>(k)]),
                        2.0 * (j - 1));
      }
      residual = std::max(residual, std::abs(row - (j == 1 ? 1.0 : 0.0)));
    }
    check.require(residual <= 1e-8, "Vandermonde residual at m=" + std::to_string(m));
    for (long long node : plan.nodes) {
      check.require(node >= m && node <= 3LL * m * m,
                    "node bounds at m=" + std::to_string(m));
    }
    if (m == 4) norm4 = plan.one_norm;
    if (m == 32) norm32 = plan.one_norm;
  }
  const double allowed = 2.0 * std::log(32.0) / std::log(4.0);
  check.note("one-norm ratio " + shortest_double(norm32 / norm4) + " allowed " +
             shortest_double(allowed));
  check.require(norm32 / norm4 <= allowed, "|b|_1(32)/|b|_1(4) within 2 ln32/ln4");
  return Verdict{3, "Richardson nodes and weights", check.pass, check.details.str()};
}

ExperimentConfig heisenberg_study_config(const AcceptanceOptions& options) {
  ExperimentConfig config;
  config.experiment_id = "acceptance-extrapolation";
  config.L = 6;
  config.seed = options.seed;
  config.times = {1.0};
  config.formula = FormulaDescriptor{"suzuki", 1, 0};
  config.method = ExperimentConfig::Method::kRichardson;
  config.m_values = {1, 2, 3, 4, 5};
  return config;
}

Verdict criterion_extrapolation_power(const AcceptanceOptions& options) {
  Check check;
  const auto rows = run_error_vs_m(heisenberg_study_config(options), 1.0);
  std::vector<double> errors;
  for (const auto& row : rows) {
    errors.push_back(row.err_extrapolated);
    check.note("m=" + std::to_string(row.m) + " err " +
               shortest_double(row.err_extrapolated));
  }
  check.require(errors[4] <= errors[0] / 100.0,
                "error at m=5 at least 100x below m=1");
  std::size_t first_below = errors.size();
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i] < 1e-10) {
      first_below = i;
      break;
    }
  }
  check.require(first_below < errors.size(), "error reaches below 1e-10");
  for (std::size_t i = 0; i + 1 <= first_below && first_below < errors.size(); ++i) {
    check.require(errors[i + 1] < errors[i],
                  "monotone decrease before the 1e-10 floor at m=" +
                      std::to_string(i + 1));
  }
  return Verdict{4, "Richardson extrapolation power (6-qubit chain)", check.pass,
                 check.details.str()};
}

Verdict criterion_noise_plateau(const AcceptanceOptions& options) {
  Check check;
  constexpr double kEps = 1e-6;
  ExperimentConfig exact_config = heisenberg_study_config(options);
  ExperimentConfig noisy_config = exact_config;
  noisy_config.measurement.kind = MeasurementSpec::Kind::kBoundedNoise;
  noisy_config.measurement.eps_data = kEps;
  noisy_config.measurement.adversarial = true;

  const auto exact_rows = run_error_vs_m(exact_config, 1.0);
  const auto noisy_rows = run_error_vs_m(noisy_config, 1.0);
  for (std::size_t i = 0; i < noisy_rows.size(); ++i) {
    const int m = noisy_rows[i].m;
    const double one_norm = make_plan(m, 1, 2).one_norm;
    const double ceiling = exact_rows[i].err_extrapolated + one_norm * kEps;
    const double error = noisy_rows[i].err_extrapolated;
    check.note("m=" + std::to_string(m) + " err " + shortest_double(error) +
               " ceiling " + shortest_double(ceiling));
    check.require(error >= kEps * (1.0 - 1e-9),
                  "error never below eps_data at m=" + std::to_string(m));
    check.require(error <= ceiling * (1.0 + 1e-9) + 1e-15,
                  "error within eps_ext + |b|_1 eps_data at m=" + std::to_string(m));
  }
  return Verdict{5, "adversarial noise plateau", check.pass, check.details.str()};
}

Verdict criterion_interpolation_error(const AcceptanceOptions& options) {
  Check check;
  const TermSum terms = build_heisenberg_chain(4, options.seed);
  const StagedFormula s2 = suzuki(1, terms.size());
  const SplitMix64 master(options.seed);
  const StateVector state =
      random_bitstring_state(4, master.child("interp-state").state());
  const Observable obs =
      random_pauli_observable(4, 3, master.child("interp-observable").state());
  const double lambda = 4.0 * sum_of_term_norms(terms);
  const double T = 2.0 / lambda;  // arranges a_max Upsilon lambda T = 2 > 1
  check.note("base " + shortest_double(s2.a_max * s2.stages * lambda * T));
  const double f0 = exact_evolve_expectation(terms, T, state, obs);
  for (int m : {4, 6, 8}) {
    const double ell = choose_ell_snapped(s2.a_max, s2.stages, lambda, T, s2.order, m);
    const InterpolationPlan plan = make_interpolation_plan(m, ell);
    std::vector<double> s_values;
    std::vector<double> values;
    for (long long r : plan.snapped_nodes) {
      s_values.push_back(1.0 / static_cast<double>(r));
      values.push_back(trotter_expectation(s2, terms, r, T, state, obs));
    }
    const double estimate = interpolate_at_zero(s_values, values);
    const double bound = 2.0 * 11.0 * std::exp(-1.5 * m) * obs.norm;
    check.note("m=" + std::to_string(m) + " err " + shortest_double(std::abs(estimate - f0)) +
               " bound " + shortest_double(bound));
    check.require(std::abs(estimate - f0) <= bound,
                  "interpolation error bound at m=" + std::to_string(m));
  }
  return Verdict{6, "Chebyshev interpolation error bound", check.pass,
                 check.details.str()};
}

Verdict criterion_lebesgue(const AcceptanceOptions& options) {
  Check check;
  for (int m : {2, 4, 8}) {
    std::vector<double> nodes;
    for (int i = 1; i <= m; ++i) {
      nodes.push_back(std::cos(kPi * (2.0 * i - 1.0) / (2.0 * m)));
    }
    const double numeric = lebesgue_constant(nodes, 100'000);
    check.note("m=" + std::to_string(m) + " L " + shortest_double(numeric) + " bound " +
               shortest_double(lebesgue_bound(m)));
    check.require(numeric <= lebesgue_bound(m),
                  "exact-node Lebesgue bound at m=" + std::to_string(m));
  }
  // Snapped nodes under the interpolation-plan ell rule.
  const TermSum terms = build_heisenberg_chain(4, options.seed);
  const StagedFormula s2 = suzuki(1, terms.size());
  const double lambda = 4.0 * sum_of_term_norms(terms);
  const double T = 2.0 / lambda;
  for (int m : {2, 4, 8}) {
    const double ell = choose_ell_snapped(s2.a_max, s2.stages, lambda, T, s2.order, m);
    const InterpolationPlan plan = make_interpolation_plan(m, ell);
    const double exact_node_value = lebesgue_constant(plan.raw_nodes, 100'000);
    check.note("m=" + std::to_string(m) + " L' " + shortest_double(plan.lebesgue) +
               " 2L " + shortest_double(2.0 * exact_node_value));
    check.require(plan.lebesgue <= 2.0 * exact_node_value,
                  "snapped Lebesgue within 2x at m=" + std::to_string(m));
  }
  return Verdict{7, "Lebesgue constants (exact and snapped)", check.pass,
                 check.details.str()};
}

Verdict criterion_structure_check(const AcceptanceOptions&) {
  Check check;
  const auto T_grid = default_structure_check_T_grid();
  const auto s_grid = default_structure_check_s_grid();
  const StructureCheckReport window = step_expansion_structure_check(T_grid, s_grid);
  check.require(!window.inconclusive, "stage-one fits conclusive");
  check.note("s2 exponent " + shortest_double(window.s2_exponent) + " threshold 3.5");
  check.require(window.pass, "s^2-coefficient T-exponent > 3.5 on [0.5, 2]");

  std::vector<double> small_T;
  for (int i = 0; i < 6; ++i) small_T.push_back(0.02 * std::pow(5.0, i / 5.0));
  const StructureCheckReport small = step_expansion_structure_check(small_T, s_grid);
  check.note("s1 exponent " + shortest_double(small.s1_exponent) + " target 2 +- 0.3");
  check.require(std::abs(small.s1_exponent - 2.0) <= 0.3,
                "s^1-coefficient exponent within 0.3 of 2 at small T");
  return Verdict{8, "step-size expansion structure check", check.pass,
                 check.details.str()};
}

Verdict criterion_hoeffding(const AcceptanceOptions& options) {
  Check check;
  const SplitMix64 master(options.seed);
  const Observable obs =
      random_pauli_observable(2, 3, master.child("hoeffding-observable").state());
  const StateVector state =
      random_bitstring_state(2, master.child("hoeffding-state").state());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(obs.matrix);
  const double spread =
      solver.eigenvalues().maxCoeff() - solver.eigenvalues().minCoeff();
  const Complex raw = state.amplitudes.dot(obs.matrix * state.amplitudes);
  const double exact = raw.real();

  constexpr double kEps = 0.05;
  constexpr double kDelta = 0.05;
  constexpr int kTrials = 200;
  const long long n = hoeffding_samples(kEps, kDelta);
  int failures = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const double mean = simulate_incoherent(
        obs, state, n, master.child("hoeffding-trial", trial).state());
    if (std::abs(mean - exact) > kEps * (spread / 2.0)) ++failures;
  }
  const double rate = failures / static_cast<double>(kTrials);
  const double limit = kDelta + 3.0 * std::sqrt(kDelta * (1 - kDelta) / kTrials);
  check.note("N " + std::to_string(n) + " failures " + std::to_string(failures) +
             " rate " + shortest_double(rate) + " limit " + shortest_double(limit));
  check.require(rate <= limit, "empirical failure rate within delta' + 3 se");
  return Verdict{9, "Hoeffding sample-count validity", check.pass, check.details.str()};
}

Verdict criterion_resource_formulas(const AcceptanceOptions&) {
  Check check;
  // Frozen values from tools/resource_oracle.py.
  {
    const long long expected[] = {2, 9, 12};
    const MinSteps a = sufficient_min_steps(1.0, 1, 1.0, 1.0, 1, 2, 3, 0.5, 1.0);
    const MinSteps b = sufficient_min_steps(0.5, 2, 2.0, 1.0, 2, 2, 4, 1e-3, 1.5);
    const MinSteps c = sufficient_min_steps(0.5, 1, 1.0, 1.0, 1, 1, 2, 0.01, 1.381);
    const long long got[] = {a.steps, b.steps, c.steps};
    for (int i = 0; i < 3; ++i) {
      check.require(got[i] == expected[i],
                    "sufficient_min_steps case " + std::to_string(i) + " got " +
                        std::to_string(got[i]) + " want " + std::to_string(expected[i]));
    }
  }
  {
    const long long expected[] = {91270, 6313, 44993};
    const long long got[] = {iqae_grover_calls(0.01, 8, 0.01),
                             iqae_grover_calls(0.1, 4, 0.05),
                             iqae_grover_calls(0.02, 16, 0.02)};
    for (int i = 0; i < 3; ++i) {
      check.require(got[i] == expected[i],
                    "iqae_grover_calls case " + std::to_string(i) + " got " +
                        std::to_string(got[i]) + " want " + std::to_string(expected[i]));
    }
  }
  {
    const long long expected[] = {88420, 1556665, 24489};
    const long long got[] = {shadows_samples(0.1, 0.01, 10, 1.0),
                             shadows_samples(0.05, 0.05, 100, 2.0),
                             shadows_samples(0.2, 0.1, 3, 1.5)};
    for (int i = 0; i < 3; ++i) {
      check.require(got[i] == expected[i],
                    "shadows_samples case " + std::to_string(i) + " got " +
                        std::to_string(got[i]) + " want " + std::to_string(expected[i]));
    }
  }
  {
    const std::vector<long long> nodes1 = {5, 8, 21};
    const std::vector<long long> nodes2 = {3};
    const std::vector<long long> nodes3 = {2, 4, 8};
    const ResourceReport r1 = resource_report(nodes1, 1);
    const ResourceReport r2 = resource_report(nodes2, 5);
    const ResourceReport r3 = resource_report(nodes3, 10);
    check.require(r1.d_max == 21 && r1.c_trot == 34, "resource_report case 0");
    check.require(r2.d_max == 3 && r2.c_trot == 15, "resource_report case 1");
    check.require(r3.d_max == 8 && r3.c_trot == 140, "resource_report case 2");
  }
  return Verdict{10, "resource formulas vs arithmetic oracle", check.pass,
                 check.details.str()};
}

Verdict criterion_symmetry_projection(const AcceptanceOptions& options) {
  Check check;
  const TermSum terms = build_heisenberg_chain(2, options.seed);
  Matrix projector = Matrix::Zero(4, 4);
  // Total-Z = 0 sector of two qubits: basis states 01 and 10.
  projector(1, 1) = 1.0;
  projector(2, 2) = 1.0;
  const TermSum projected = project_terms(terms, SymmetryProjector(projector));

  const double lambda_full = sum_of_term_norms(terms);
  const double lambda_projected = sum_of_term_norms(projected);
  check.note("Lambda_S " + shortest_double(lambda_projected) + " Lambda " +
             shortest_double(lambda_full));
  check.require(lambda_projected <= lambda_full + 1e-12, "Lambda_S <= Lambda");

  const double alpha_full = alpha_comm(terms, 2, CommutatorMode::kExact);
  const double alpha_projected = alpha_comm(projected, 2, CommutatorMode::kExact);
  check.note("alpha2_S " + shortest_double(alpha_projected) + " alpha2 " +
             shortest_double(alpha_full));
  check.require(alpha_projected <= alpha_full + 1e-12, "alpha^(2)_S <= alpha^(2)");
  return Verdict{11, "symmetry-projected norms", check.pass, check.details.str()};
}

}  // namespace

Verdict run_acceptance_criterion(int id, const AcceptanceOptions& options) {
  switch (id) {
    case 1:
      return criterion_order_of_accuracy(options);
    case 2:
      return criterion_bch_bounds(options);
    case 3:
      return criterion_richardson_plan(options);
    case 4:
      return criterion_extrapolation_power(options);
    case 5:
      return criterion_noise_plateau(options);
    case 6:
      return criterion_interpolation_error(options);
    case 7:
      return criterion_lebesgue(options);
    case 8:
      return criterion_structure_check(options);
    case 9:
      return criterion_hoeffding(options);
    case 10:
      return criterion_resource_formulas(options);
    case 11:
      return criterion_symmetry_projection(options);
    default:
      throw std::invalid_argument("acceptance criterion id must be in [1, 11]");
  }
}

std::vector<Verdict> run_acceptance_suite(const AcceptanceOptions& options) {
  std::vector<Verdict> verdicts;
  verdicts.reserve(kAcceptanceCriteria);
  for (int id = 1; id <= kAcceptanceCriteria; ++id) {
    verdicts.push_back(run_acceptance_criterion(id, options));
  }
  return verdicts;
}

}  // namespace qextrap
