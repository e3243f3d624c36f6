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
#include <vector>

#include "qextrap/types.hpp"

namespace qextrap {

/// Chebyshev interpolation plan on [-ell, ell] with nodes snapped to inverse
/// integers so only whole Trotter steps are executed.
struct InterpolationPlan {
  int m = 0;            // even number of sample points
  double ell = 0.0;     // interval half-width
  std::vector<double> raw_nodes;        // ell cos(pi (2i-1) / 2m), i = 1..m
  std::vector<long long> snapped_nodes; // signed integers r_i, s_i = 1/r_i
  double lebesgue = 0.0;                // numeric estimate on the snapped nodes
  double max_perturbation = 0.0;        // max |1/r_i - raw_i|
};

/// Classical bound (2/pi) ln(m+1) + 1 on the Chebyshev Lebesgue constant.
double lebesgue_bound(int m);

/// Interval half-width ell = (1/2) (a_max Upsilon lambda T)^{-(1+1/p)} for the
/// long-time regime; for base <= 1 the value is clamped to 1/2 and *clamped
/// (when given) is set.
double choose_ell(double a_max, int upsilon, double lambda, double T, int p,
                  bool* clamped = nullptr);

/// choose_ell capped so that the inverse-integer snapping perturbation
/// (<= ell^2) stays within the ell / (m^2 L_m) allowance of the perturbed
/// Lebesgue bound, using L_m = (2/pi) ln(m+1) + 1.
double choose_ell_snapped(double a_max, int upsilon, double lambda, double T,
                          int p, int m);

struct SnappedNodes {
  std::vector<long long> nodes;
  double max_perturbation = 0.0;
};

/// Nearest inverse integers to the raw nodes, sign-preserving. Collisions move
/// the later node outward to the next unused integer; the achieved maximum
/// perturbation is reported.
SnappedNodes snap_nodes(std::span<const double> raw_nodes,
                        long long cap = 10'000'000);

/// Degree m-1 interpolant evaluated at s = 0 by the second barycentric
/// formula, with pairwise differences scaled by the node span to avoid
/// under/overflow. A node exactly at 0 short-circuits to its value.
double interpolate_at_zero(std::span<const double> nodes,
                           std::span<const double> values);

/// Numeric Lebesgue constant: max of sum_i |L_i(s)| over a uniform grid on
/// [min node, max node].
double lebesgue_constant(std::span<const double> nodes, int grid_points);

/// Lagrange cardinal values L_i(0): the effective combination weights the
/// interpolated s = 0 estimate applies to the data.
std::vector<double> lagrange_at_zero(std::span<const double> nodes);

/// Builds the plan: raw Chebyshev nodes, snapped integers, numeric Lebesgue
/// estimate, and the inverse-integer-spacing check |1/r_i - raw_i| <= ell^2.
InterpolationPlan make_interpolation_plan(int m, double ell,
                                          int lebesgue_grid_points = 100'000);

}  // namespace qextrap
