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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qextrap/types.hpp"

namespace qextrap {

/// Tensor product of single-qubit Pauli operators with a real coefficient.
/// axes[q] in {'I','X','Y','Z'} acts on qubit q; qubit 0 is the least
/// significant bit of the basis index.
struct PauliString {
  int n_qubits = 0;
  std::string axes;
  double coefficient = 1.0;

  Matrix dense() const;
};

/// A Hamiltonian H = sum_g H_g as an ordered list of Hermitian terms.
/// Dense matrices are the canonical backend; Pauli strings are kept only as
/// construction provenance. Immutable after construction.
class TermSum {
 public:
  struct Term {
    Matrix matrix;
    std::optional<PauliString> pauli;
  };

  TermSum(int n_qubits, std::vector<Matrix> dense_terms);
  static TermSum from_paulis(int n_qubits, std::vector<PauliString> paulis);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dimension() const { return dimension_; }
  int size() const { return static_cast<int>(terms_.size()); }
  const Matrix& term(int g) const { return terms_[static_cast<std::size_t>(g)].matrix; }
  const std::optional<PauliString>& pauli(int g) const {
    return terms_[static_cast<std::size_t>(g)].pauli;
  }

  /// Dense H = sum of all terms.
  Matrix total() const;

 private:
  TermSum() = default;
  void validate() const;

  int n_qubits_ = 0;
  Eigen::Index dimension_ = 0;
  std::vector<Term> terms_;
};

/// Projector onto a symmetry subspace; idempotent and Hermitian within 1e-12.
class SymmetryProjector {
 public:
  explicit SymmetryProjector(Matrix projector);
  const Matrix& matrix() const { return projector_; }

 private:
  Matrix projector_;
};

/// 1D Heisenberg chain of given length with per-site Z fields drawn uniformly
/// from [-1,1]. Term order: XX couplings left to right, then YY, then ZZ,
/// then the Z fields.
TermSum build_heisenberg_chain(int length, std::uint64_t seed);

/// Largest singular value; for Hermitian input, the largest |eigenvalue|.
double spectral_norm(const Matrix& m);

/// Sum of the spectral norms of all terms.
double sum_of_term_norms(const TermSum& terms);

/// Right-nested commutator [H_{g_1}, [H_{g_2}, [... , H_{g_j}]]].
/// Indices are 0-based positions into the term list; a single index returns
/// the term itself.
Matrix nested_commutator(const TermSum& terms, std::span<const int> indices);

enum class CommutatorMode { kExact, kBound };

struct AlphaCommOptions {
  std::uint64_t tuple_cap = 1'000'000;  // max Gamma^j tuples in exact mode
  double prune_tol = 1e-14;             // drop branches once the running commutator is this small
};

/// Commutator-scaling measure of order j: in exact mode the sum of nested
/// commutator norms over all j-tuples of terms, in bound mode
/// (1/2) (2 sum_g |H_g|)^j.
double alpha_comm(const TermSum& terms, int j, CommutatorMode mode,
                  const AlphaCommOptions& options = {});

struct LambdaOptions {
  int j_cap = 0;  // 0 means sigma*m + 4
  AlphaCommOptions alpha;
};

struct LambdaValue {
  double value = 0.0;
  int j_cap = 0;        // largest j examined in exact mode
  bool truncated = false;  // exact mode truncates an infinite sup
};

/// Growth-rate parameter for extrapolation error bounds. Bound mode returns
/// 4 sum_g |H_g|, which dominates every lambda_{j,l}. Exact mode evaluates
/// lambda_{j,l} = (sum over compositions j_1+..+j_l = j, j_k multiple of
/// sigma, j_k >= p, of prod_k 2 alpha^{(j_k+1)}/(j_k+1)^2)^{1/(j+l)} over
/// j in sigma*Z+, sigma*m <= j <= j_cap and 1 <= l <= K, and reports the
/// truncation.
LambdaValue lambda_param(const TermSum& terms, int p, int sigma, int m, int K,
                         CommutatorMode mode, const LambdaOptions& options = {});

/// Replaces each term by Pi H_g Pi. Downstream alpha_comm / lambda_param on
/// the result realize the symmetry-projected quantities.
TermSum project_terms(const TermSum& terms, const SymmetryProjector& projector);

}  // namespace qextrap
