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

#include "qextrap/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "qextrap/errors.hpp"

namespace qextrap {

namespace {

constexpr double kConditionLimit = 1e12;

struct PowerFit {
  RealVector coefficients;
  double condition = 0.0;
  double residual = 0.0;
};

// Least squares on a normalized abscissa; rows y_i ~ sum_q c_q (x_i)^{powers[q]}.
PowerFit fit_powers(std::span<const double> x, const Matrix& rhs,
                    std::span<const int> powers, Matrix* coefficient_rows) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto q = static_cast<Eigen::Index>(powers.size());
  double x_ref = 0.0;
  for (double v : x) x_ref = std::max(x_ref, std::abs(v));
  Matrix design(n, q);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index c = 0; c < q; ++c) {
      design(i, c) = std::pow(x[static_cast<std::size_t>(i)] / x_ref,
                              powers[static_cast<std::size_t>(c)]);
    }
  }
  Eigen::JacobiSVD<Matrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  PowerFit fit;
  fit.condition =
      svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
  if (!(fit.condition < kConditionLimit)) {
    throw FitFailureError("power-ladder fit is ill-conditioned", fit.condition);
  }
  const Matrix solution = svd.solve(rhs);
  fit.residual = (design * solution - rhs).cwiseAbs().maxCoeff();
  if (coefficient_rows != nullptr) {
    coefficient_rows->resize(q, rhs.cols());
    for (Eigen::Index c = 0; c < q; ++c) {
      coefficient_rows->row(c) =
          solution.row(c) / std::pow(x_ref, powers[static_cast<std::size_t>(c)]);
    }
  }
  return fit;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
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

}  // namespace

SeriesFit fit_observable_series(const StagedFormula& formula, const TermSum& terms,
                                double T, const StateVector& state,
                                const Observable& obs, int j_max,
                                std::span<const double> s_grid,
                                std::vector<int> powers) {
  if (powers.empty()) {
    for (int j = formula.order; j <= j_max; ++j) {
      if (j % formula.symmetry == 0) powers.push_back(j);
    }
  }
  if (s_grid.size() < static_cast<std::size_t>(j_max) + 3) {
    throw std::invalid_argument("s_grid needs at least j_max + 3 points");
  }
  std::vector<long long> r_grid;
  r_grid.reserve(s_grid.size());
  for (double s : s_grid) {
    if (s == 0.0) throw std::invalid_argument("s_grid entries must be nonzero");
    const double r = 1.0 / s;
    if (std::abs(r - std::round(r)) > 1e-9) {
      throw std::invalid_argument("s_grid entries must be inverse integers");
    }
    r_grid.push_back(static_cast<long long>(std::llround(r)));
  }
  const double f_exact = exact_evolve_expectation(terms, T, state, obs);
  Matrix rhs(static_cast<Eigen::Index>(s_grid.size()), 1);
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    rhs(static_cast<Eigen::Index>(i), 0) =
        trotter_expectation(formula, terms, r_grid[i], T, state, obs) - f_exact;
  }
  Matrix coefficient_rows;
  const PowerFit fit = fit_powers(s_grid, rhs, powers, &coefficient_rows);

  SeriesFit result;
  result.powers = std::move(powers);
  result.coefficients.reserve(static_cast<std::size_t>(coefficient_rows.rows()));
  for (Eigen::Index c = 0; c < coefficient_rows.rows(); ++c) {
    result.coefficients.push_back(coefficient_rows(c, 0).real());
  }
  result.residual = fit.residual;
  result.grid.assign(s_grid.begin(), s_grid.end());
  result.condition = fit.condition;
  return result;
}

std::vector<double> default_structure_check_T_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 9; ++i) grid.push_back(0.5 * std::pow(4.0, i / 8.0));
  return grid;
}

std::vector<long long> default_structure_check_s_grid() {
  return {60, 75, 95, 120, 150, 190, 240, 300};
}

StructureCheckReport step_expansion_structure_check(std::span<const double> T_grid,
                                                std::span<const long long> s_grid) {
  StructureCheckReport report;
  if (T_grid.size() < 3 || s_grid.size() < 6) {
    report.inconclusive = true;
    report.note = "grids too small for a two-stage fit";
    return report;
  }
  Matrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  const TermSum terms(1, {x, z});
  const StagedFormula p1 = first_order(2);
  const std::vector<int> powers = {1, 2, 3, 4};

  std::vector<double> s_values;
  s_values.reserve(s_grid.size());
  for (long long r : s_grid) s_values.push_back(1.0 / static_cast<double>(r));

  report.T_grid.assign(T_grid.begin(), T_grid.end());
  try {
    for (double T : T_grid) {
      // Exact reference by eigendecomposition of the full Hamiltonian.
      Eigen::SelfAdjointEigenSolver<Matrix> solver(terms.total());
      const Matrix exact =
          solver.eigenvectors() *
          (Complex(0, -T) * solver.eigenvalues().cast<Complex>().array())
              .exp()
              .matrix()
              .asDiagonal() *
          solver.eigenvectors().adjoint();
      Matrix rhs(static_cast<Eigen::Index>(s_grid.size()), 4);
      for (std::size_t i = 0; i < s_grid.size(); ++i) {
        const Matrix deviation = iterated_unitary(p1, terms, s_grid[i], T) - exact;
        rhs.row(static_cast<Eigen::Index>(i)) = deviation.reshaped().transpose();
      }
      Matrix coefficient_rows;
      const PowerFit fit = fit_powers(s_values, rhs, powers, &coefficient_rows);
      report.max_fit_condition = std::max(report.max_fit_condition, fit.condition);
      report.max_fit_residual = std::max(report.max_fit_residual, fit.residual);
      const auto coefficient_norm = [&](Eigen::Index row) {
        const Vector v = coefficient_rows.row(row).transpose();
        return spectral_norm(v.reshaped(2, 2));
      };
      report.s1_norms.push_back(coefficient_norm(0));
      report.s2_norms.push_back(coefficient_norm(1));
    }
  } catch (const FitFailureError& error) {
    report.inconclusive = true;
    report.note = std::string("stage-one fit degenerate: ") + error.what();
    return report;
  }
  report.s1_exponent = loglog_slope(T_grid, report.s1_norms);
  report.s2_exponent = loglog_slope(T_grid, report.s2_norms);
  report.pass = report.s2_exponent > report.threshold;
  return report;
}

HeffConsistencyReport heff_consistency(const StagedFormula& formula,
                                       const TermSum& terms,
                                       std::span<const double> t_grid) {
  constexpr int kMaxOrder = 4;
  const auto fitted = bch_error_operators(formula, terms, kMaxOrder + 2, t_grid);
  HeffConsistencyReport report;
  report.pass = true;
  for (int j = 2; j <= kMaxOrder; ++j) {
    const double fitted_norm = spectral_norm(fitted[static_cast<std::size_t>(j - 2)]);
    const double alpha = alpha_comm(terms, j, CommutatorMode::kExact);
    const double bound = std::pow(formula.a_max * formula.stages, j) * alpha /
                         (static_cast<double>(j) * j);
    report.fitted_norms.push_back(fitted_norm);
    report.bounds.push_back(bound);
    if (fitted_norm > bound * (1.0 + 1e-6)) report.pass = false;
  }
  return report;
}

}  // namespace qextrap
