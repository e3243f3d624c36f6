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

#include "qextrap/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qextrap/errors.hpp"
#include "qextrap/inverse_integer.hpp"

namespace qextrap {

double lebesgue_bound(int m) { return 2.0 / kPi * std::log(m + 1.0) + 1.0; }

double choose_ell(double a_max, int upsilon, double lambda, double T, int p,
                  bool* clamped) {
  if (!(a_max > 0) || upsilon < 1 || !(lambda > 0) || !(T > 0) || p < 1) {
    throw std::invalid_argument("choose_ell requires positive inputs");
  }
  const double base = a_max * upsilon * lambda * T;
  if (clamped != nullptr) *clamped = base < 1.0;
  if (base < 1.0) return 0.5;
  return 0.5 * std::pow(base, -(1.0 + 1.0 / p));
}

double choose_ell_snapped(double a_max, int upsilon, double lambda, double T,
                          int p, int m) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument("choose_ell_snapped requires even m >= 2");
  }
  const double ell = choose_ell(a_max, upsilon, lambda, T, p);
  const double base = a_max * upsilon * lambda * T;
  const double perturbation_cap =
      1.0 / (std::pow(base, 1.0 + 1.0 / p) * m * m * lebesgue_bound(m));
  return std::min(ell, perturbation_cap);
}

SnappedNodes snap_nodes(std::span<const double> raw_nodes, long long cap) {
  SnappedNodes result;
  result.nodes.reserve(raw_nodes.size());
  std::set<long long> used;
  for (double s : raw_nodes) {
    long long r = nearest_inverse_integer(s, cap);
    // Collision policy: the later node moves outward (larger |r|) to the next
    // unused integer.
    while (!used.insert(r).second) {
      r += r > 0 ? 1 : -1;
      if (std::llabs(r) > cap) {
        throw ResourceLimitError("snapped node exceeded the cap while resolving a collision");
      }
    }
    result.nodes.push_back(r);
    result.max_perturbation = std::max(
        result.max_perturbation, std::abs(1.0 / static_cast<double>(r) - s));
  }
  return result;
}

namespace {

// Barycentric weights with pairwise differences scaled to O(1).
std::vector<double> barycentric_weights(std::span<const double> nodes) {
  const std::size_t m = nodes.size();
  double lo = nodes[0], hi = nodes[0];
  for (double s : nodes) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (m > 1 && hi == lo) {
    throw std::invalid_argument("interpolation nodes must be distinct");
  }
  const double scale = m > 1 ? (hi - lo) / 2.0 : 1.0;
  std::vector<double> weights(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t n = 0; n < m; ++n) {
      if (n == i) continue;
      const double difference = (nodes[i] - nodes[n]) / scale;
      if (difference == 0.0) {
        throw std::invalid_argument("interpolation nodes must be distinct");
      }
      weights[i] /= difference;
    }
  }
  return weights;
}

}  // namespace

double interpolate_at_zero(std::span<const double> nodes,
                           std::span<const double> values) {
  if (nodes.size() != values.size() || nodes.empty()) {
    throw std::invalid_argument("nodes and values must be nonempty and aligned");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == 0.0) return values[i];
  }
  const std::vector<double> weights = barycentric_weights(nodes);
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double q = weights[i] / (0.0 - nodes[i]);
    numerator += q * values[i];
    denominator += q;
  }
  return numerator / denominator;
}

std::vector<double> lagrange_at_zero(std::span<const double> nodes) {
  std::vector<double> cardinal(nodes.size(), 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == 0.0) {
      cardinal[i] = 1.0;
      return cardinal;
    }
  }
  const std::vector<double> weights = barycentric_weights(nodes);
  double denominator = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    denominator += weights[i] / (0.0 - nodes[i]);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    cardinal[i] = (weights[i] / (0.0 - nodes[i])) / denominator;
  }
  return cardinal;
}

double lebesgue_constant(std::span<const double> nodes, int grid_points) {
  if (grid_points < 1000) {
    throw std::invalid_argument("lebesgue_constant requires grid_points >= 1000");
  }
  if (nodes.empty()) throw std::invalid_argument("lebesgue_constant requires nodes");
  if (nodes.size() == 1) return 1.0;
  const std::vector<double> weights = barycentric_weights(nodes);
  double lo = nodes[0], hi = nodes[0];
  for (double s : nodes) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  double best = 1.0;  // the Lebesgue function equals 1 at every node
  for (int g = 0; g < grid_points; ++g) {
    const double s = lo + (hi - lo) * g / (grid_points - 1.0);
    double numerator = 0.0;
    double denominator = 0.0;
    bool at_node = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (s == nodes[i]) {
        at_node = true;
        break;
      }
      const double q = weights[i] / (s - nodes[i]);
      numerator += std::abs(q);
      denominator += q;
    }
    if (at_node) continue;
    best = std::max(best, numerator / std::abs(denominator));
  }
  return best;
}

InterpolationPlan make_interpolation_plan(int m, double ell,
                                          int lebesgue_grid_points) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument("interpolation plans require even m >= 2");
  }
  if (!(ell > 0.0) || ell > 0.5) {
    throw std::invalid_argument("interpolation plans require 0 < ell <= 1/2");
  }
  InterpolationPlan plan;
  plan.m = m;
  plan.ell = ell;
  plan.raw_nodes.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    plan.raw_nodes.push_back(ell * std::cos(kPi * (2.0 * i - 1.0) / (2.0 * m)));
  }
  SnappedNodes snapped = snap_nodes(plan.raw_nodes);
  plan.snapped_nodes = std::move(snapped.nodes);
  plan.max_perturbation = snapped.max_perturbation;
  if (plan.max_perturbation > ell * ell) {
    throw ConditioningError(
        "snapping perturbation exceeds the ell^2 spacing bound");
  }
  std::vector<double> snapped_s;
  snapped_s.reserve(plan.snapped_nodes.size());
  for (long long r : plan.snapped_nodes) {
    snapped_s.push_back(1.0 / static_cast<double>(r));
  }
  plan.lebesgue = lebesgue_constant(snapped_s, lebesgue_grid_points);
  return plan;
}

}  // namespace qextrap
