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

#include <span>
#include <string>
#include <vector>

#include "qextrap/evolution.hpp"
#include "qextrap/product_formula.hpp"
#include "qextrap/term_algebra.hpp"

namespace qextrap {

/// Least-squares fit of f(s) - f_exact to a restricted power ladder.
struct SeriesFit {
  std::vector<int> powers;
  std::vector<double> coefficients;
  double residual = 0.0;   // max misfit over the grid, never hidden
  std::vector<double> grid;
  double condition = 0.0;
};

/// Fits the Trotter-expectation deviation to sum_j c_j s^j over the inverse
/// integer grid. The default ladder is j in sigma Z+, p <= j <= j_max;
/// passing explicit powers overrides it (used to test that deliberately
/// included odd powers vanish for symmetric formulae).
SeriesFit fit_observable_series(const StagedFormula& formula, const TermSum& terms,
                                double T, const StateVector& state,
                                const Observable& obs, int j_max,
                                std::span<const double> s_grid,
                                std::vector<int> powers = {});

/// Two-stage least-squares probe of the step-size expansion for H = X + Z
/// under first-order Trotter: per T, the matrix deviation P^{1/s}(sT) -
/// e^{-iHT} is fitted entrywise to powers s^1..s^4 over the inverse-integer
/// grid; the fitted s^1 and s^2 coefficient magnitudes are then fitted to
/// power laws in T. Passing requires the s^2 exponent to exceed 3.5, which
/// discriminates against an expansion whose s^j coefficients all scale as
/// T^{j+1}.
struct StructureCheckReport {
  bool pass = false;
  bool inconclusive = false;
  double s1_exponent = 0.0;
  double s2_exponent = 0.0;
  double threshold = 3.5;
  std::vector<double> T_grid;
  std::vector<double> s1_norms;
  std::vector<double> s2_norms;
  double max_fit_condition = 0.0;
  double max_fit_residual = 0.0;
  std::string note;
};

StructureCheckReport step_expansion_structure_check(std::span<const double> T_grid,
                                                std::span<const long long> s_grid);

/// Default grids for the structure check: T log-spaced on [0.5, 2] and an
/// inverse-integer ladder deep enough that the stage-one fit is converged.
std::vector<double> default_structure_check_T_grid();
std::vector<long long> default_structure_check_s_grid();

/// Compares fitted |E_j| from the matrix-log oracle against the commutator
/// bound (a_max Upsilon)^j alpha^{(j)} / j^2 in exact mode, for j = 2..4.
struct HeffConsistencyReport {
  bool pass = false;
  std::vector<double> fitted_norms;  // |E_2|, |E_3|, |E_4|
  std::vector<double> bounds;
};

HeffConsistencyReport heff_consistency(const StagedFormula& formula,
                                       const TermSum& terms,
                                       std::span<const double> t_grid);

}  // namespace qextrap
