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

#include "qextrap/term_algebra.hpp"
#include "qextrap/types.hpp"

namespace qextrap {

/// A staged product formula: Upsilon stages, each a permuted sweep over all
/// terms with per-slot coefficients. The written product runs stage 1
/// leftmost and slot 1 leftmost within a stage; operators apply to states
/// right to left.
///
/// The canonical stage table is stored unmerged, so a_max and the
/// first-order consistency sums refer to the construction itself. The merged
/// execution layout (adjacent equal-term exponentials combined across stage
/// boundaries) is exposed separately via exponential_sequence().
struct StagedFormula {
  int stages = 0;                             // Upsilon
  RealMatrix coefficients;                    // stages x Gamma
  std::vector<std::vector<int>> permutations; // slot -> term index, 0-based
  int order = 0;                              // p
  int symmetry = 1;                           // sigma: 2 if symmetric, else 1
  double a_max = 0.0;

  int gamma_count() const { return static_cast<int>(coefficients.cols()); }
};

/// First-order Trotter: one identity sweep, all coefficients 1.
StagedFormula first_order(int gamma_count);

/// Suzuki formula S_{2k} flattened to staged form, built from the symmetric
/// second-order splitting by the standard recursion with
/// u_k = 1/(4 - 4^{1/(2k-1)}). Order 2k, symmetric.
StagedFormula suzuki(int k, int gamma_count);

/// One exponential e^{-i t * coefficient * H_term} of the execution layout.
struct ExponentialEntry {
  int term = 0;
  double coefficient = 0.0;
};

/// Execution layout in application order (first entry hits the state first),
/// with adjacent equal-term exponentials merged by coefficient addition.
std::vector<ExponentialEntry> exponential_sequence(const StagedFormula& formula);

/// Dense unitary P(t): the ordered product of term exponentials, each
/// computed from a per-term Hermitian eigendecomposition (cached per term and
/// exact-bits exponent scale within the call).
Matrix unitary(const StagedFormula& formula, const TermSum& terms, double t);

/// P(T/r)^r for r > 0; for r < 0, (P(T/r)^{-1})^{|r|} = P(-T/|r|)^{-|r|},
/// realizing negative step-size samples. The result is the literal r-fold
/// product of the single step matrix.
Matrix iterated_unitary(const StagedFormula& formula, const TermSum& terms,
                        long long r, double T);

/// H_eff(t) = (i/t) Log P(t) via the principal matrix logarithm of the step
/// unitary. Throws BranchCutError if any eigenphase is within 1e-9 of +-pi.
Matrix effective_hamiltonian(const StagedFormula& formula, const TermSum& terms,
                             double t);

/// Least-squares fit of H_eff(t) - H to sum_{j=1}^{j_max} E_{j+1} t^j over the
/// grid; returns [E_2, ..., E_{j_max+1}]. This is the numeric oracle for the
/// BCH error operators; no combinatorial BCH evaluation is performed.
std::vector<Matrix> bch_error_operators(const StagedFormula& formula,
                                        const TermSum& terms, int j_max,
                                        std::span<const double> t_grid);

/// True iff P(-t) P(t) = 1 within 1e-10 max-entry at t_probe and t_probe/2.
bool is_symmetric(const StagedFormula& formula, const TermSum& terms,
                  double t_probe);

}  // namespace qextrap
