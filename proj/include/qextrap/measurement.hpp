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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qextrap/evolution.hpp"
#include "qextrap/types.hpp"

namespace qextrap {

/// Splits a total error budget between extrapolation and per-point data
/// error, where the data error is amplified by |b|_1 (Richardson) or the
/// Lebesgue constant (interpolation).
struct ErrorBudget {
  double eps_total = 0.0;
  double eps_ext = 0.0;
  double eps_data = 0.0;
  double amplification = 1.0;
};

ErrorBudget make_budget(double eps_total, double amplification);

/// Hoeffding sample count ceil(ln(2/delta') / (2 eps_data^2)).
long long hoeffding_samples(double eps_data, double delta_prime);

/// Grover-oracle call count for iterative amplitude estimation,
/// ceil(100/eps ln(2m/delta ln(pi/eps))). Cost formula only.
long long iqae_grover_calls(double eps_data, int m, double delta);

/// Classical-shadows sample count ceil(128 max_norm^2 ln(M/delta) / eps^2).
long long shadows_samples(double eps_data, double delta, long long M,
                          double max_norm);

/// Sample mean of N independent measurements of the observable in the given
/// state, drawn from the exact eigenvalue distribution.
double simulate_incoherent(const Observable& obs, const StateVector& state_after,
                           long long N, std::uint64_t seed);

/// Bounded-noise stand-in for a coherent (amplitude-estimation) evaluation:
/// exact value plus uniform noise on [-eps_data, eps_data].
double simulate_noisy_eval(double exact_value, double eps_data, std::uint64_t seed);

/// Worst-case variant: exact value plus eps_data times a caller-supplied sign.
double adversarial_eval(double exact_value, double eps_data, double sign);

struct ResourceReport {
  long long d_max = 0;   // max Trotter steps in any single circuit
  long long c_trot = 0;  // total Trotter steps across circuits and repetitions
  std::vector<std::pair<long long, long long>> per_node;  // (r_k, repetitions)
};

ResourceReport resource_report(std::span<const long long> nodes,
                               long long repetitions_per_node);

}  // namespace qextrap
