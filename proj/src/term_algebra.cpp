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

#include "qextrap/term_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qextrap/errors.hpp"
#include "qextrap/rng.hpp"

namespace qextrap {

namespace {

constexpr double kHermitianTol = 1e-12;

Matrix pauli_matrix(char axis) {
  Matrix m(2, 2);
  switch (axis) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli axis must be one of I, X, Y, Z");
  }
  return m;
}

}  // namespace

Matrix PauliString::dense() const {
  if (static_cast<int>(axes.size()) != n_qubits) {
    throw std::invalid_argument("pauli axes length does not match n_qubits");
  }
  if (!std::isfinite(coefficient)) {
    throw std::invalid_argument("pauli coefficient must be finite");
  }
  Matrix m = Matrix::Identity(1, 1);
  // Highest qubit occupies the leftmost tensor factor.
  for (int q = n_qubits - 1; q >= 0; --q) {
    const Matrix factor = pauli_matrix(axes[static_cast<std::size_t>(q)]);
    Matrix out(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < 2; ++i) {
      for (Eigen::Index j = 0; j < 2; ++j) {
        out.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = factor(i, j) * m;
      }
    }
    m = std::move(out);
  }
  return coefficient * m;
}

TermSum::TermSum(int n_qubits, std::vector<Matrix> dense_terms) {
  n_qubits_ = n_qubits;
  dimension_ = Eigen::Index(1) << n_qubits;
  terms_.reserve(dense_terms.size());
  for (auto& m : dense_terms) {
    terms_.push_back(Term{std::move(m), std::nullopt});
  }
  validate();
}

TermSum TermSum::from_paulis(int n_qubits, std::vector<PauliString> paulis) {
  TermSum sum;
  sum.n_qubits_ = n_qubits;
  sum.dimension_ = Eigen::Index(1) << n_qubits;
  sum.terms_.reserve(paulis.size());
  for (auto& p : paulis) {
    if (p.n_qubits != n_qubits) {
      throw std::invalid_argument("pauli string qubit count mismatch");
    }
    Matrix dense = p.dense();
    sum.terms_.push_back(Term{std::move(dense), std::move(p)});
  }
  sum.validate();
  return sum;
}

void TermSum::validate() const {
  if (n_qubits_ < 1) {
    throw std::invalid_argument("TermSum requires at least one qubit");
  }
  for (const auto& t : terms_) {
    if (t.matrix.rows() != dimension_ || t.matrix.cols() != dimension_) {
      throw std::invalid_argument("term dimension does not match 2^n_qubits");
    }
    if (hermiticity_residue(t.matrix) > kHermitianTol) {
      throw std::invalid_argument("term is not Hermitian within 1e-12");
    }
  }
}

Matrix TermSum::total() const {
  Matrix h = Matrix::Zero(dimension_, dimension_);
  for (const auto& t : terms_) h += t.matrix;
  return h;
}

SymmetryProjector::SymmetryProjector(Matrix projector) : projector_(std::move(projector)) {
  if (projector_.rows() != projector_.cols()) {
    throw std::invalid_argument("projector must be square");
  }
  if (hermiticity_residue(projector_) > kHermitianTol) {
    throw std::invalid_argument("projector is not Hermitian within 1e-12");
  }
  if ((projector_ * projector_ - projector_).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("projector is not idempotent within 1e-12");
  }
}

TermSum build_heisenberg_chain(int length, std::uint64_t seed) {
  if (length < 2) {
    throw std::invalid_argument("Heisenberg chain needs length >= 2");
  }
  SplitMix64 rng = SplitMix64(seed).child("heisenberg-fields");
  std::vector<double> fields(static_cast<std::size_t>(length));
  for (auto& h : fields) h = rng.uniform(-1.0, 1.0);

  std::vector<PauliString> paulis;
  paulis.reserve(static_cast<std::size_t>(4 * length - 3));
  for (char axis : {'X', 'Y', 'Z'}) {
    for (int i = 0; i + 1 < length; ++i) {
      PauliString p;
      p.n_qubits = length;
      p.axes = std::string(static_cast<std::size_t>(length), 'I');
      p.axes[static_cast<std::size_t>(i)] = axis;
      p.axes[static_cast<std::size_t>(i + 1)] = axis;
      p.coefficient = 1.0;
      paulis.push_back(std::move(p));
    }
  }
  for (int i = 0; i < length; ++i) {
    PauliString p;
    p.n_qubits = length;
    p.axes = std::string(static_cast<std::size_t>(length), 'I');
    p.axes[static_cast<std::size_t>(i)] = 'Z';
    p.coefficient = fields[static_cast<std::size_t>(i)];
    paulis.push_back(std::move(p));
  }
  return TermSum::from_paulis(length, std::move(paulis));
}

double spectral_norm(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("spectral_norm requires a square matrix");
  }
  if (m.rows() == 0) return 0.0;
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  if (hermiticity_residue(m) <= 1e-12 * std::max(1.0, scale)) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double sum_of_term_norms(const TermSum& terms) {
  double total = 0.0;
  for (int g = 0; g < terms.size(); ++g) total += spectral_norm(terms.term(g));
  return total;
}

Matrix nested_commutator(const TermSum& terms, std::span<const int> indices) {
  if (indices.empty()) {
    throw std::invalid_argument("nested_commutator requires at least one index");
  }
  for (int g : indices) {
    if (g < 0 || g >= terms.size()) {
      throw std::invalid_argument("nested_commutator index out of range");
    }
  }
  Matrix c = terms.term(indices.back());
  for (std::size_t k = indices.size() - 1; k-- > 0;) {
    const Matrix& h = terms.term(indices[k]);
    c = h * c - c * h;
  }
  return c;
}

namespace {

// Depth-first sum over suffixes of the index tuple: level 1 holds the
// innermost term, each level above wraps one more commutator. Branches are
// abandoned once the running commutator is numerically zero.
void alpha_comm_dfs(const TermSum& terms, const Matrix& current, int remaining,
                    double prune_tol, double& total) {
  if (remaining == 0) {
    total += spectral_norm(current);
    return;
  }
  for (int g = 0; g < terms.size(); ++g) {
    const Matrix& h = terms.term(g);
    Matrix next = h * current - current * h;
    if (next.cwiseAbs().maxCoeff() < prune_tol) continue;
    alpha_comm_dfs(terms, next, remaining - 1, prune_tol, total);
  }
}

}  // namespace

double alpha_comm(const TermSum& terms, int j, CommutatorMode mode,
                  const AlphaCommOptions& options) {
  if (j < 1) {
    throw std::invalid_argument("alpha_comm requires j >= 1");
  }
  if (mode == CommutatorMode::kBound) {
    return 0.5 * std::pow(2.0 * sum_of_term_norms(terms), j);
  }
  const auto gamma = static_cast<std::uint64_t>(terms.size());
  std::uint64_t tuples = 1;
  for (int i = 0; i < j; ++i) {
    if (tuples > options.tuple_cap / std::max<std::uint64_t>(gamma, 1)) {
      throw ResourceLimitError(
          "alpha_comm exact mode would exceed the tuple cap; use bound mode");
    }
    tuples *= gamma;
  }
  if (tuples > options.tuple_cap) {
    throw ResourceLimitError(
        "alpha_comm exact mode would exceed the tuple cap; use bound mode");
  }
  double total = 0.0;
  for (int g = 0; g < terms.size(); ++g) {
    alpha_comm_dfs(terms, terms.term(g), j - 1, options.prune_tol, total);
  }
  return total;
}

namespace {

// Sum over compositions j_1 + ... + j_l = j with each j_k a multiple of sigma
// and j_k >= p, of prod_k weights[j_k].
double composition_sum(int j, int l, int sigma, int p,
                       const std::vector<double>& weights) {
  if (l == 1) {
    if (j >= p && j % sigma == 0) return weights[static_cast<std::size_t>(j)];
    return 0.0;
  }
  double total = 0.0;
  for (int j1 = ((p + sigma - 1) / sigma) * sigma; j1 <= j - p; j1 += sigma) {
    const double rest = composition_sum(j - j1, l - 1, sigma, p, weights);
    if (rest != 0.0) total += weights[static_cast<std::size_t>(j1)] * rest;
  }
  return total;
}

}  // namespace

LambdaValue lambda_param(const TermSum& terms, int p, int sigma, int m, int K,
                         CommutatorMode mode, const LambdaOptions& options) {
  if (p < 1 || m < 1 || K < 1 || (sigma != 1 && sigma != 2)) {
    throw std::invalid_argument("lambda_param requires p,m,K >= 1 and sigma in {1,2}");
  }
  if (mode == CommutatorMode::kBound) {
    return LambdaValue{4.0 * sum_of_term_norms(terms), 0, false};
  }
  const int j_cap = options.j_cap > 0 ? options.j_cap : sigma * m + 4;
  // weights[j] = 2 alpha^{(j+1)} / (j+1)^2 for j >= p, j a multiple of sigma
  std::vector<double> weights(static_cast<std::size_t>(j_cap + 1), 0.0);
  for (int j = p; j <= j_cap; ++j) {
    if (j % sigma != 0) continue;
    const double a = alpha_comm(terms, j + 1, CommutatorMode::kExact, options.alpha);
    weights[static_cast<std::size_t>(j)] = 2.0 * a / ((j + 1.0) * (j + 1.0));
  }
  double best = 0.0;
  for (int j = sigma * m; j <= j_cap; j += sigma) {
    for (int l = 1; l <= K; ++l) {
      const double sum = composition_sum(j, l, sigma, p, weights);
      if (sum <= 0.0) continue;
      best = std::max(best, std::pow(sum, 1.0 / (j + l)));
    }
  }
  return LambdaValue{best, j_cap, true};
}

TermSum project_terms(const TermSum& terms, const SymmetryProjector& projector) {
  const Matrix& pi = projector.matrix();
  if (pi.rows() != terms.dimension()) {
    throw std::invalid_argument("projector dimension does not match terms");
  }
  std::vector<Matrix> projected;
  projected.reserve(static_cast<std::size_t>(terms.size()));
  for (int g = 0; g < terms.size(); ++g) {
    projected.push_back(pi * terms.term(g) * pi);
  }
  return TermSum(terms.n_qubits(), std::move(projected));
}

}  // namespace qextrap
