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

/// Well-conditioned Richardson plan: integer Trotter-step nodes at rescaled
/// Chebyshev-derived values and closed-form extrapolation weights.
///
/// Nodes are stored exactly as generated, r_k = r_scale ceil(R / sin(pi (2k-1)
/// / 8m)) with R = sqrt(8) m / pi, which is descending in k; the index
/// attaining the largest step size s = 1/r (the smallest node) is recorded in
/// max_s_index to avoid off-by-one readings against conventions that order
/// samples by descending s.
struct RichardsonPlan {
  int m = 0;
  long long r_scale = 1;
  int eta = 2;  // exponent ladder spacing: 2 for symmetric formulae, else 1
  std::vector<long long> nodes;
  RealVector weights;
  double one_norm = 0.0;
  int max_s_index = 0;
};

/// Builds the plan and verifies sum(b) = 1, the generalized Vandermonde
/// residual (<= 1e-8) and the node-range bounds m <= r_k / r_scale <= 3 m^2.
RichardsonPlan make_plan(int m, long long r_scale, int eta);

/// Unscaled node set ceil(R / sin(pi (2k-1) / 8m)), k = 1..m.
std::vector<long long> unscaled_nodes(int m);

/// sum_k b_k values_k in compensated (error-free-transformation) summation.
double extrapolate(const RichardsonPlan& plan, std::span<const double> values);

/// |b|_1 for each m (r_scale = 1, eta = 2).
std::vector<double> one_norm_growth(std::span<const int> m_list);

struct MinSteps {
  long long steps = 1;
  bool side_condition_ok = false;  // a_max Upsilon s_1 lambda T < 1/2 at s_1 = 1/steps
  double side_condition_value = 0.0;
};

/// Sufficient minimum Trotter steps r_1 for relative extrapolation error eps:
/// ceil(base (4 |b|_1 / eps)^{1/(sigma m)}) for base = a_max Upsilon lambda T
/// <= 1, with the extra base^{ceil(sigma m / p)/(sigma m)} factor otherwise.
MinSteps sufficient_min_steps(double a_max, int upsilon, double lambda, double T,
                              int p, int sigma, int m, double eps,
                              double b_one_norm);

/// Smallest r_scale making every node at least min_steps.
long long choose_r_scale(int m, long long min_steps);

}  // namespace qextrap
