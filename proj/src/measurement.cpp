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

#include "qextrap/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qextrap/rng.hpp"

namespace qextrap {

ErrorBudget make_budget(double eps_total, double amplification) {
  if (!(eps_total > 0.0 && eps_total < 2.0)) {
    throw std::invalid_argument("make_budget requires eps_total in (0,2)");
  }
  if (!(amplification >= 1.0)) {
    throw std::invalid_argument("make_budget requires amplification >= 1");
  }
  ErrorBudget budget;
  budget.eps_total = eps_total;
  budget.amplification = amplification;
  budget.eps_ext = eps_total / 2.0;
  budget.eps_data = eps_total / (2.0 * amplification);
  return budget;
}

long long hoeffding_samples(double eps_data, double delta_prime) {
  if (!(eps_data > 0.0 && eps_data <= 1.0) || !(delta_prime > 0.0 && delta_prime < 1.0)) {
    throw std::invalid_argument("hoeffding_samples requires eps in (0,1], delta' in (0,1)");
  }
  return static_cast<long long>(
      std::ceil(std::log(2.0 / delta_prime) / (2.0 * eps_data * eps_data)));
}

long long iqae_grover_calls(double eps_data, int m, double delta) {
  if (!(eps_data > 0.0 && eps_data < 1.0) || m < 1 || !(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("iqae_grover_calls requires eps, delta in (0,1) and m >= 1");
  }
  const double inner = std::log(kPi / eps_data);
  return static_cast<long long>(
      std::ceil(100.0 / eps_data * std::log(2.0 * m / delta * inner)));
}

long long shadows_samples(double eps_data, double delta, long long M,
                          double max_norm) {
  if (!(eps_data > 0.0 && eps_data < 1.0) || !(delta > 0.0 && delta < 1.0) ||
      M < 1 || !(max_norm > 0.0)) {
    throw std::invalid_argument("shadows_samples parameter out of range");
  }
  return static_cast<long long>(
      std::ceil(128.0 / (eps_data * eps_data) * max_norm * max_norm *
                std::log(static_cast<double>(M) / delta)));
}

double simulate_incoherent(const Observable& obs, const StateVector& state_after,
                           long long N, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("simulate_incoherent requires N >= 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(obs.matrix);
  const RealVector outcomes = solver.eigenvalues();
  const Vector overlaps = solver.eigenvectors().adjoint() * state_after.amplitudes;
  RealVector cumulative(outcomes.size());
  double total = 0.0;
  for (Eigen::Index i = 0; i < outcomes.size(); ++i) {
    total += std::norm(overlaps(i));
    cumulative(i) = total;
  }
  SplitMix64 rng = SplitMix64(seed).child("incoherent-shots");
  double sum = 0.0;
  for (long long shot = 0; shot < N; ++shot) {
    const double u = rng.uniform() * total;
    Eigen::Index i = 0;
    while (i + 1 < cumulative.size() && u >= cumulative(i)) ++i;
    sum += outcomes(i);
  }
  return sum / static_cast<double>(N);
}

double simulate_noisy_eval(double exact_value, double eps_data, std::uint64_t seed) {
  if (eps_data < 0.0) throw std::invalid_argument("eps_data must be nonnegative");
  if (eps_data == 0.0) return exact_value;
  SplitMix64 rng = SplitMix64(seed).child("bounded-noise");
  return exact_value + rng.uniform(-eps_data, eps_data);
}

double adversarial_eval(double exact_value, double eps_data, double sign) {
  return exact_value + eps_data * (sign >= 0.0 ? 1.0 : -1.0);
}

ResourceReport resource_report(std::span<const long long> nodes,
                               long long repetitions_per_node) {
  if (repetitions_per_node < 1) {
    throw std::invalid_argument("resource_report requires repetitions >= 1");
  }
  ResourceReport report;
  for (long long node : nodes) {
    if (node < 1) throw std::invalid_argument("resource_report requires nodes >= 1");
    report.d_max = std::max(report.d_max, node);
    report.c_trot += node * repetitions_per_node;
    report.per_node.emplace_back(node, repetitions_per_node);
  }
  return report;
}

}  // namespace qextrap
