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
#include <vector>

#include "qextrap/product_formula.hpp"
#include "qextrap/term_algebra.hpp"
#include "qextrap/types.hpp"

namespace qextrap {

/// Normalized pure state over 2^n basis states. Freshly constructed states
/// must be unit norm within 1e-12; long products of step unitaries drift, so
/// evolved states are rebuilt under the engine guarantee of 1e-10.
struct StateVector {
  explicit StateVector(Vector amplitudes, double norm_tolerance = 1e-12);
  Vector amplitudes;
};

/// Hermitian observable with its spectral norm cached.
struct Observable {
  explicit Observable(Matrix matrix);
  Matrix matrix;
  double norm = 0.0;
};

/// <psi| e^{iHT} O e^{-iHT} |psi> via full eigendecomposition of the dense
/// total Hamiltonian. The imaginary residue is checked against 1e-10 and
/// discarded.
double exact_evolve_expectation(const TermSum& terms, double T,
                                const StateVector& state, const Observable& obs);

/// f(s) at s = 1/r: the Trotter-evolved expectation value, computed by
/// applying the step unitary to the state r times (never conjugating the
/// observable). Negative r follows the iterated_unitary semantics.
double trotter_expectation(const StagedFormula& formula, const TermSum& terms,
                           long long r, double T, const StateVector& state,
                           const Observable& obs);

/// The evolved statevector P(T/r)^r |psi>, shared by the expectation and the
/// sampling-based measurement models.
StateVector trotter_evolve(const StagedFormula& formula, const TermSum& terms,
                           long long r, double T, const StateVector& state);

struct TaylorCoefficients {
  std::vector<double> coefficients;     // c_j = d^j f / ds^j (0) / j!, j = 1..j_max
  std::vector<double> error_estimates;  // |coarse - refined| per coefficient
  std::vector<long long> stencil;       // positive-side integers of the refined stencil
};

/// Taylor coefficients of f(s) at s = 0 by central finite differences on a
/// symmetric stencil of inverse integers nearest the points +-k h. The
/// refined (h/2) estimate is returned; the coarse/refined spread gives the
/// error estimate.
TaylorCoefficients taylor_coefficients_fd(const StagedFormula& formula,
                                          const TermSum& terms, double T,
                                          const StateVector& state,
                                          const Observable& obs, int j_max,
                                          double h);

/// Deterministic computational-basis state from a seeded bitstring draw.
StateVector random_bitstring_state(int n, std::uint64_t seed);

/// Sum of n_terms uniformly drawn non-identity Pauli strings, coefficient 1.
Observable random_pauli_observable(int n, int n_terms, std::uint64_t seed);

}  // namespace qextrap
