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

#include "qextrap/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "qextrap/errors.hpp"
#include "qextrap/inverse_integer.hpp"
#include "qextrap/rng.hpp"

namespace qextrap {

StateVector::StateVector(Vector amps, double norm_tolerance)
    : amplitudes(std::move(amps)) {
  if (std::abs(amplitudes.norm() - 1.0) > norm_tolerance) {
    throw std::invalid_argument("state vector must have unit 2-norm");
  }
}

Observable::Observable(Matrix m) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("observable must be square");
  }
  if (hermiticity_residue(matrix) > 1e-12) {
    throw std::invalid_argument("observable must be Hermitian within 1e-12");
  }
  norm = spectral_norm(matrix);
}

double exact_evolve_expectation(const TermSum& terms, double T,
                                const StateVector& state, const Observable& obs) {
  if (state.amplitudes.size() != terms.dimension() ||
      obs.matrix.rows() != terms.dimension()) {
    throw std::invalid_argument("dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(terms.total());
  const Vector phases =
      (Complex(0, -T) * solver.eigenvalues().cast<Complex>().array()).exp().matrix();
  const Vector evolved =
      solver.eigenvectors() *
      (phases.array() * (solver.eigenvectors().adjoint() * state.amplitudes).array())
          .matrix();
  const Complex value = evolved.dot(obs.matrix * evolved);
  if (std::abs(value.imag()) > 1e-10) {
    throw std::runtime_error("expectation value has non-negligible imaginary part");
  }
  return value.real();
}

StateVector trotter_evolve(const StagedFormula& formula, const TermSum& terms,
                           long long r, double T, const StateVector& state) {
  if (r == 0) throw std::invalid_argument("trotter_evolve requires r != 0");
  const long long steps = r > 0 ? r : -r;
  Matrix step;
  if (r > 0) {
    step = unitary(formula, terms, T / static_cast<double>(r));
  } else {
    step = unitary(formula, terms, -T / static_cast<double>(steps)).adjoint();
  }
  Vector psi = state.amplitudes;
  for (long long i = 0; i < steps; ++i) psi = step * psi;
  return StateVector(std::move(psi), 1e-10);
}

double trotter_expectation(const StagedFormula& formula, const TermSum& terms,
                           long long r, double T, const StateVector& state,
                           const Observable& obs) {
  const StateVector evolved = trotter_evolve(formula, terms, r, T, state);
  const Complex value = evolved.amplitudes.dot(obs.matrix * evolved.amplitudes);
  if (std::abs(value.imag()) > 1e-10) {
    throw std::runtime_error("expectation value has non-negligible imaginary part");
  }
  return value.real();
}

namespace {

// Solve the full interpolation system through the symmetric snapped stencil
// on a normalized abscissa; returns c_1..c_j_max.
std::vector<double> stencil_coefficients(const StagedFormula& formula,
                                         const TermSum& terms, double T,
                                         const StateVector& state,
                                         const Observable& obs, int j_max,
                                         const std::vector<long long>& stencil) {
  std::vector<double> nodes;
  std::vector<double> values;
  nodes.reserve(2 * stencil.size());
  for (long long r : stencil) {
    for (long long signed_r : {r, -r}) {
      nodes.push_back(1.0 / static_cast<double>(signed_r));
      values.push_back(trotter_expectation(formula, terms, signed_r, T, state, obs));
    }
  }
  const auto n = static_cast<Eigen::Index>(nodes.size());
  double scale = 0.0;
  for (double x : nodes) scale = std::max(scale, std::abs(x));
  RealMatrix design(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double power = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      design(i, j) = power;
      power *= nodes[static_cast<std::size_t>(i)] / scale;
    }
  }
  const RealVector solution =
      design.colPivHouseholderQr().solve(Eigen::Map<const RealVector>(values.data(), n));
  std::vector<double> coefficients(static_cast<std::size_t>(j_max));
  double unscale = 1.0;
  for (int j = 1; j <= j_max; ++j) {
    unscale /= scale;
    coefficients[static_cast<std::size_t>(j - 1)] = solution(j) * unscale;
  }
  return coefficients;
}

std::vector<long long> snapped_stencil(int points, double h) {
  std::vector<long long> stencil;
  std::set<long long> used;
  for (int k = 1; k <= points; ++k) {
    const long long r = nearest_inverse_integer(k * h);
    if (!used.insert(r).second) {
      throw StencilDegeneracyError(
          "stencil nodes collide after integer snapping; reduce h");
    }
    stencil.push_back(r);
  }
  return stencil;
}

}  // namespace

TaylorCoefficients taylor_coefficients_fd(const StagedFormula& formula,
                                          const TermSum& terms, double T,
                                          const StateVector& state,
                                          const Observable& obs, int j_max,
                                          double h) {
  if (j_max < 1 || j_max > 6) {
    throw std::invalid_argument("taylor_coefficients_fd requires 1 <= j_max <= 6");
  }
  if (!(h > 0.0)) throw std::invalid_argument("taylor_coefficients_fd requires h > 0");
  // 2K symmetric nodes determine a degree 2K-1 interpolant; one extra pair
  // guards the top coefficients.
  const int points = (j_max + 2) / 2 + 1;
  const auto coarse_stencil = snapped_stencil(points, h);
  const auto fine_stencil = snapped_stencil(points, h / 2.0);
  const auto coarse =
      stencil_coefficients(formula, terms, T, state, obs, j_max, coarse_stencil);
  const auto fine =
      stencil_coefficients(formula, terms, T, state, obs, j_max, fine_stencil);

  TaylorCoefficients result;
  result.coefficients = fine;
  result.error_estimates.resize(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) {
    result.error_estimates[i] = std::abs(fine[i] - coarse[i]);
  }
  result.stencil = fine_stencil;
  return result;
}

StateVector random_bitstring_state(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_bitstring_state requires n >= 1");
  SplitMix64 rng = SplitMix64(seed).child("bitstring-state");
  const auto index =
      static_cast<Eigen::Index>(rng.uniform_int(std::uint64_t(1) << n));
  Vector amplitudes = Vector::Zero(Eigen::Index(1) << n);
  amplitudes(index) = 1.0;
  return StateVector(std::move(amplitudes));
}

Observable random_pauli_observable(int n, int n_terms, std::uint64_t seed) {
  if (n < 1 || n_terms < 1) {
    throw std::invalid_argument("random_pauli_observable requires n, n_terms >= 1");
  }
  SplitMix64 rng = SplitMix64(seed).child("pauli-observable");
  const char axes[] = {'I', 'X', 'Y', 'Z'};
  Matrix total = Matrix::Zero(Eigen::Index(1) << n, Eigen::Index(1) << n);
  for (int t = 0; t < n_terms; ++t) {
    PauliString p;
    p.n_qubits = n;
    p.coefficient = 1.0;
    do {
      p.axes.clear();
      for (int q = 0; q < n; ++q) p.axes.push_back(axes[rng.uniform_int(4)]);
    } while (p.axes.find_first_not_of('I') == std::string::npos);
    total += p.dense();
  }
  return Observable(std::move(total));
}

}  // namespace qextrap
