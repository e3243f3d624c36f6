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

#include "qextrap/richardson.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "qextrap/errors.hpp"

namespace qextrap {

namespace {

// Neumaier summation with fma-captured product errors.
class CompensatedSum {
 public:
  void add_product(double a, double b) {
    const double product = a * b;
    compensation_ += std::fma(a, b, -product);
    add(product);
  }

  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Weights depend only on node ratios, so they are computed from the unscaled
// nodes; plans differing only in r_scale share bit-identical weights.
RealVector closed_form_weights(const std::vector<long long>& unscaled, int eta) {
  const auto m = static_cast<Eigen::Index>(unscaled.size());
  RealVector weights = RealVector::Ones(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const double rk = std::pow(static_cast<double>(unscaled[static_cast<std::size_t>(k)]),
                               eta);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == k) continue;
      const double ri = std::pow(
          static_cast<double>(unscaled[static_cast<std::size_t>(i)]), eta);
      weights(k) *= rk / (rk - ri);
    }
  }
  return weights;
}

}  // namespace

std::vector<long long> unscaled_nodes(int m) {
  if (m < 1) throw std::invalid_argument("make_plan requires m >= 1");
  const double R = std::sqrt(8.0) * m / kPi;
  std::vector<long long> nodes;
  nodes.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    const double denom = std::sin(kPi * (2.0 * k - 1.0) / (8.0 * m));
    nodes.push_back(static_cast<long long>(std::ceil(R / denom)));
  }
  return nodes;
}

RichardsonPlan make_plan(int m, long long r_scale, int eta) {
  if (m < 1) throw std::invalid_argument("make_plan requires m >= 1");
  if (r_scale < 1) throw std::invalid_argument("make_plan requires r_scale >= 1");
  if (eta != 1 && eta != 2) throw std::invalid_argument("eta must be 1 or 2");

  const std::vector<long long> unscaled = unscaled_nodes(m);
  if (std::set<long long>(unscaled.begin(), unscaled.end()).size() !=
      unscaled.size()) {
    throw NodeCollisionError("duplicate Richardson nodes at m=" + std::to_string(m) +
                             ", r_scale=" + std::to_string(r_scale));
  }
  for (std::size_t k = 0; k < unscaled.size(); ++k) {
    if (unscaled[k] < m || unscaled[k] > 3LL * m * m) {
      throw ConditioningError("node outside the [m, 3m^2] range at m=" +
                              std::to_string(m));
    }
  }

  RichardsonPlan plan;
  plan.m = m;
  plan.r_scale = r_scale;
  plan.eta = eta;
  plan.nodes.reserve(unscaled.size());
  for (long long u : unscaled) plan.nodes.push_back(r_scale * u);
  plan.weights = closed_form_weights(unscaled, eta);
  plan.one_norm = plan.weights.cwiseAbs().sum();
  plan.max_s_index = static_cast<int>(
      std::min_element(plan.nodes.begin(), plan.nodes.end()) - plan.nodes.begin());

  // Verification solve: the closed form must satisfy V b = e_1 with
  // V_{jk} = s_k^{eta (j-1)}.
  double residual = 0.0;
  for (int j = 1; j <= m; ++j) {
    CompensatedSum row;
    for (int k = 0; k < m; ++k) {
      const double s = 1.0 / static_cast<double>(plan.nodes[static_cast<std::size_t>(k)]);
      row.add_product(plan.weights(k), std::pow(s, eta * (j - 1)));
    }
    residual = std::max(residual, std::abs(row.value() - (j == 1 ? 1.0 : 0.0)));
  }
  if (residual > 1e-8) {
    throw ConditioningError("Richardson weight residual " + std::to_string(residual) +
                            " exceeds 1e-8 at m=" + std::to_string(m));
  }
  return plan;
}

double extrapolate(const RichardsonPlan& plan, std::span<const double> values) {
  if (static_cast<int>(values.size()) != plan.m) {
    throw std::invalid_argument("value count does not match plan nodes");
  }
  CompensatedSum sum;
  for (int k = 0; k < plan.m; ++k) {
    sum.add_product(plan.weights(k), values[static_cast<std::size_t>(k)]);
  }
  return sum.value();
}

std::vector<double> one_norm_growth(std::span<const int> m_list) {
  std::vector<double> norms;
  norms.reserve(m_list.size());
  for (int m : m_list) norms.push_back(make_plan(m, 1, 2).one_norm);
  return norms;
}

MinSteps sufficient_min_steps(double a_max, int upsilon, double lambda, double T,
                              int p, int sigma, int m, double eps,
                              double b_one_norm) {
  if (!(a_max > 0) || upsilon < 1 || !(lambda > 0) || !(T > 0) || p < 1 ||
      (sigma != 1 && sigma != 2) || m < 1 || !(b_one_norm > 0)) {
    throw std::invalid_argument("sufficient_min_steps requires positive inputs");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("sufficient_min_steps requires eps in (0,1)");
  }
  const double base = a_max * upsilon * lambda * T;
  const double noise_factor = std::pow(4.0 * b_one_norm / eps, 1.0 / (sigma * m));
  double r1;
  if (base <= 1.0) {
    r1 = base * noise_factor;
  } else {
    const int k_over_p = (sigma * m + p - 1) / p;  // ceil(sigma m / p)
    r1 = std::pow(base, 1.0 + static_cast<double>(k_over_p) / (sigma * m)) *
         noise_factor;
  }
  MinSteps result;
  result.steps = std::max<long long>(1, static_cast<long long>(std::ceil(r1)));
  result.side_condition_value = base / static_cast<double>(result.steps);
  result.side_condition_ok = result.side_condition_value < 0.5;
  return result;
}

long long choose_r_scale(int m, long long min_steps) {
  if (min_steps < 1) throw std::invalid_argument("choose_r_scale requires min_steps >= 1");
  const std::vector<long long> unscaled = unscaled_nodes(m);
  const long long smallest = *std::min_element(unscaled.begin(), unscaled.end());
  return std::max<long long>(1, (min_steps + smallest - 1) / smallest);
}

}  // namespace qextrap
