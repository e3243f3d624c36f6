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

#include "qextrap/product_formula.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qextrap/errors.hpp"

namespace qextrap {

namespace {

void check_dimensions(const StagedFormula& formula, const TermSum& terms) {
  if (formula.gamma_count() != terms.size()) {
    throw std::invalid_argument("formula gamma_count does not match term count");
  }
}

double max_abs_coefficient(const RealMatrix& coefficients) {
  return coefficients.size() == 0 ? 0.0 : coefficients.cwiseAbs().maxCoeff();
}

}  // namespace

StagedFormula first_order(int gamma_count) {
  if (gamma_count < 1) {
    throw std::invalid_argument("first_order requires gamma_count >= 1");
  }
  StagedFormula f;
  f.stages = 1;
  f.coefficients = RealMatrix::Ones(1, gamma_count);
  f.permutations.emplace_back(static_cast<std::size_t>(gamma_count));
  std::iota(f.permutations[0].begin(), f.permutations[0].end(), 0);
  f.order = 1;
  f.symmetry = 1;
  f.a_max = 1.0;
  return f;
}

StagedFormula suzuki(int k, int gamma_count) {
  if (k < 1) throw std::invalid_argument("suzuki requires k >= 1");
  if (gamma_count < 1) {
    throw std::invalid_argument("suzuki requires gamma_count >= 1");
  }
  std::vector<int> forward(static_cast<std::size_t>(gamma_count));
  std::iota(forward.begin(), forward.end(), 0);
  std::vector<int> reversed(forward.rbegin(), forward.rend());

  // Stage list as (permutation, uniform stage coefficient) pairs; the S_2
  // block is [reversed sweep, forward sweep] at half step.
  struct Stage {
    const std::vector<int>* perm;
    double coeff;
  };
  std::vector<Stage> stages = {{&reversed, 0.5}, {&forward, 0.5}};
  for (int level = 2; level <= k; ++level) {
    const double u = 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * level - 1.0)));
    std::vector<Stage> next;
    next.reserve(stages.size() * 5);
    for (double scale : {u, u, 1.0 - 4.0 * u, u, u}) {
      for (const Stage& s : stages) next.push_back({s.perm, s.coeff * scale});
    }
    stages = std::move(next);
  }

  StagedFormula f;
  f.stages = static_cast<int>(stages.size());
  f.coefficients = RealMatrix(f.stages, gamma_count);
  f.permutations.reserve(stages.size());
  for (int u = 0; u < f.stages; ++u) {
    f.coefficients.row(u).setConstant(stages[static_cast<std::size_t>(u)].coeff);
    f.permutations.push_back(*stages[static_cast<std::size_t>(u)].perm);
  }
  f.order = 2 * k;
  f.symmetry = 2;
  f.a_max = max_abs_coefficient(f.coefficients);
  return f;
}

std::vector<ExponentialEntry> exponential_sequence(const StagedFormula& formula) {
  std::vector<ExponentialEntry> written;
  written.reserve(static_cast<std::size_t>(formula.stages) *
                  static_cast<std::size_t>(formula.gamma_count()));
  for (int u = 0; u < formula.stages; ++u) {
    for (int slot = 0; slot < formula.gamma_count(); ++slot) {
      written.push_back({formula.permutations[static_cast<std::size_t>(u)]
                                              [static_cast<std::size_t>(slot)],
                         formula.coefficients(u, slot)});
    }
  }
  // Application order is the reverse of the written product.
  std::vector<ExponentialEntry> merged;
  merged.reserve(written.size());
  for (auto it = written.rbegin(); it != written.rend(); ++it) {
    if (!merged.empty() && merged.back().term == it->term) {
      merged.back().coefficient += it->coefficient;
      if (merged.back().coefficient == 0.0) merged.pop_back();
    } else if (it->coefficient != 0.0) {
      merged.push_back(*it);
    }
  }
  return merged;
}

namespace {

// Per-term eigendecompositions plus exponentials memoized on the exact bits
// of the exponent scale x in e^{-i x H_term}.
class TermExponentials {
 public:
  explicit TermExponentials(const TermSum& terms)
      : terms_(terms), eigs_(static_cast<std::size_t>(terms.size())) {}

  const Matrix& exponential(int term, double x) {
    const auto key = std::make_pair(term, std::bit_cast<std::uint64_t>(x));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const Eig& e = eig(term);
    const Vector phases =
        (Complex(0, -x) * e.values.cast<Complex>().array()).exp().matrix();
    Matrix result = e.vectors * phases.asDiagonal() * e.vectors.adjoint();
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  struct Eig {
    RealVector values;
    Matrix vectors;
    bool ready = false;
  };

  const Eig& eig(int term) {
    Eig& e = eigs_[static_cast<std::size_t>(term)];
    if (!e.ready) {
      Eigen::SelfAdjointEigenSolver<Matrix> solver(terms_.term(term));
      e.values = solver.eigenvalues();
      e.vectors = solver.eigenvectors();
      e.ready = true;
    }
    return e;
  }

  const TermSum& terms_;
  std::vector<Eig> eigs_;
  std::map<std::pair<int, std::uint64_t>, Matrix> memo_;
};

}  // namespace

Matrix unitary(const StagedFormula& formula, const TermSum& terms, double t) {
  check_dimensions(formula, terms);
  TermExponentials exps(terms);
  Matrix u = Matrix::Identity(terms.dimension(), terms.dimension());
  for (const auto& entry : exponential_sequence(formula)) {
    u = exps.exponential(entry.term, entry.coefficient * t) * u;
  }
  return u;
}

Matrix iterated_unitary(const StagedFormula& formula, const TermSum& terms,
                        long long r, double T) {
  if (r == 0) throw std::invalid_argument("iterated_unitary requires r != 0");
  const long long steps = r > 0 ? r : -r;
  Matrix step;
  if (r > 0) {
    step = unitary(formula, terms, T / static_cast<double>(r));
  } else {
    step = unitary(formula, terms, -T / static_cast<double>(steps)).adjoint();
  }
  Matrix u = Matrix::Identity(terms.dimension(), terms.dimension());
  for (long long i = 0; i < steps; ++i) u = step * u;
  return u;
}

Matrix effective_hamiltonian(const StagedFormula& formula, const TermSum& terms,
                             double t) {
  if (t == 0.0) throw std::invalid_argument("effective_hamiltonian requires t != 0");
  const Matrix p = unitary(formula, terms, t);
  // Schur of a unitary is diagonal up to roundoff, and the unitary Q keeps
  // the reconstructed logarithm Hermitian even across degenerate clusters.
  Eigen::ComplexSchur<Matrix> schur(p);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("Schur decomposition failed");
  }
  const Matrix& q = schur.matrixU();
  Vector log_diag(p.rows());
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    const Complex lambda = schur.matrixT()(i, i);
    const double theta = std::arg(lambda);
    if (kPi - std::abs(theta) < 1e-9) {
      throw BranchCutError(
          "eigenphase within 1e-9 of the +-pi branch cut; reduce t");
    }
    log_diag(i) = Complex(0, 1) * std::log(lambda) / t;
  }
  Matrix h = q * log_diag.asDiagonal() * q.adjoint();
  if (hermiticity_residue(h) > 1e-10) {
    throw std::runtime_error("effective Hamiltonian not Hermitian within 1e-10");
  }
  return 0.5 * (h + h.adjoint().eval());
}

std::vector<Matrix> bch_error_operators(const StagedFormula& formula,
                                        const TermSum& terms, int j_max,
                                        std::span<const double> t_grid) {
  if (j_max < 1) throw std::invalid_argument("bch_error_operators requires j_max >= 1");
  const auto n = static_cast<Eigen::Index>(t_grid.size());
  if (n < j_max + 2) {
    throw std::invalid_argument("t_grid needs at least j_max + 2 points");
  }
  double t_ref = 0.0;
  for (double t : t_grid) t_ref = std::max(t_ref, std::abs(t));
  if (t_ref == 0.0) throw std::invalid_argument("t_grid must contain nonzero points");

  // Fit on the normalized abscissa tau = t / t_ref and unscale afterwards.
  Matrix design(n, j_max);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double tau = t_grid[static_cast<std::size_t>(i)] / t_ref;
    double power = 1.0;
    for (int j = 1; j <= j_max; ++j) {
      power *= tau;
      design(i, j - 1) = power;
    }
  }
  Eigen::JacobiSVD<Matrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double condition =
      svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
  if (!(condition < 1e12)) {
    throw FitFailureError("bch_error_operators design matrix is ill-conditioned",
                          condition);
  }

  const Eigen::Index dim = terms.dimension();
  const Matrix h = terms.total();
  Matrix rhs(n, dim * dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Matrix deviation =
        effective_hamiltonian(formula, terms, t_grid[static_cast<std::size_t>(i)]) - h;
    rhs.row(i) = deviation.reshaped().transpose();
  }
  const Matrix solution = svd.solve(rhs);

  std::vector<Matrix> operators;
  operators.reserve(static_cast<std::size_t>(j_max));
  double unscale = 1.0;
  for (int j = 1; j <= j_max; ++j) {
    unscale /= t_ref;
    const Vector coefficient = solution.row(j - 1).transpose();
    Matrix e = coefficient.reshaped(dim, dim) * unscale;
    operators.push_back(0.5 * (e + e.adjoint().eval()));
  }
  return operators;
}

bool is_symmetric(const StagedFormula& formula, const TermSum& terms,
                  double t_probe) {
  if (t_probe <= 0.0) throw std::invalid_argument("is_symmetric requires t_probe > 0");
  const Matrix identity = Matrix::Identity(terms.dimension(), terms.dimension());
  for (double t : {t_probe, t_probe / 2.0}) {
    const Matrix product = unitary(formula, terms, -t) * unitary(formula, terms, t);
    if ((product - identity).cwiseAbs().maxCoeff() > 1e-10) return false;
  }
  return true;
}

}  // namespace qextrap
