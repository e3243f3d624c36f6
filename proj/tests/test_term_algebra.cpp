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

#include <doctest.h>

#include <array>
#include <cmath>

#include "qextrap/errors.hpp"
#include "qextrap/term_algebra.hpp"

using namespace qextrap;

namespace {

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

TermSum xz_pair() { return TermSum(1, {pauli_x(), pauli_z()}); }

}  // namespace

TEST_CASE("heisenberg chain term count and determinism") {
  const TermSum chain = build_heisenberg_chain(2, 5);
  CHECK(chain.size() == 5);  // 3 couplings + 2 fields

  const TermSum a = build_heisenberg_chain(6, 11);
  const TermSum b = build_heisenberg_chain(6, 11);
  REQUIRE(a.size() == b.size());
  for (int g = 0; g < a.size(); ++g) {
    CHECK((a.term(g) - b.term(g)).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(build_heisenberg_chain(1, 0), std::invalid_argument);
}

TEST_CASE("heisenberg chain norm sum is 6 + sum |h_i| at L=3") {
  const TermSum chain = build_heisenberg_chain(3, 77);
  double field_sum = 0.0;
  for (int g = 6; g < 9; ++g) {
    REQUIRE(chain.pauli(g).has_value());
    field_sum += std::abs(chain.pauli(g)->coefficient);
  }
  CHECK(sum_of_term_norms(chain) == doctest::Approx(6.0 + field_sum).epsilon(1e-12));
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(pauli_x()) == doctest::Approx(1.0));
  CHECK(spectral_norm(Matrix::Zero(3, 3)) == 0.0);
  const Matrix commutator = pauli_x() * pauli_z() - pauli_z() * pauli_x();
  CHECK(spectral_norm(commutator) == doctest::Approx(2.0));
  CHECK_THROWS_AS(spectral_norm(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("nested commutator") {
  const TermSum terms = xz_pair();
  const std::array<int, 1> single = {0};
  CHECK((nested_commutator(terms, single) - pauli_x()).cwiseAbs().maxCoeff() == 0.0);

  const std::array<int, 2> pair = {0, 1};
  const Matrix expected = Complex(0, -2) * pauli_y();
  CHECK((nested_commutator(terms, pair) - expected).cwiseAbs().maxCoeff() < 1e-14);

  // [X,[X,Z]] = [X, -2iY] = +4Z by direct dense evaluation.
  const std::array<int, 3> triple = {0, 0, 1};
  CHECK((nested_commutator(terms, triple) - 4.0 * pauli_z()).cwiseAbs().maxCoeff() <
        1e-13);

  const std::array<int, 2> bad = {0, 2};
  CHECK_THROWS_AS(nested_commutator(terms, bad), std::invalid_argument);
  CHECK_THROWS_AS(nested_commutator(terms, std::span<const int>{}),
                  std::invalid_argument);
}

TEST_CASE("nested commutator antisymmetry at depth two") {
  const TermSum terms = xz_pair();
  const std::array<int, 2> ab = {0, 1};
  const std::array<int, 2> ba = {1, 0};
  CHECK((nested_commutator(terms, ab) + nested_commutator(terms, ba))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("alpha_comm on the X,Z pair") {
  const TermSum terms = xz_pair();
  CHECK(alpha_comm(terms, 1, CommutatorMode::kExact) == doctest::Approx(2.0));
  CHECK(alpha_comm(terms, 2, CommutatorMode::kExact) == doctest::Approx(4.0));
  CHECK(alpha_comm(terms, 2, CommutatorMode::kBound) == doctest::Approx(8.0));
}

TEST_CASE("alpha_comm at j=1 reduces to the sum of term norms") {
  const TermSum chain = build_heisenberg_chain(3, 13);
  CHECK(alpha_comm(chain, 1, CommutatorMode::kExact) ==
        doctest::Approx(sum_of_term_norms(chain)).epsilon(1e-12));
}

TEST_CASE("alpha_comm exact never exceeds the bound") {
  const TermSum terms = xz_pair();
  for (int j = 1; j <= 5; ++j) {
    CHECK(alpha_comm(terms, j, CommutatorMode::kExact) <=
          alpha_comm(terms, j, CommutatorMode::kBound) * (1 + 1e-12));
  }
  const TermSum chain = build_heisenberg_chain(2, 3);
  for (int j = 1; j <= 3; ++j) {
    CHECK(alpha_comm(chain, j, CommutatorMode::kExact) <=
          alpha_comm(chain, j, CommutatorMode::kBound) * (1 + 1e-12));
  }
}

TEST_CASE("alpha_comm exact mode enforces the tuple cap") {
  const TermSum chain = build_heisenberg_chain(4, 1);  // 13 terms
  AlphaCommOptions options;
  options.tuple_cap = 1000;
  CHECK_THROWS_AS(alpha_comm(chain, 4, CommutatorMode::kExact, options),
                  ResourceLimitError);
}

TEST_CASE("lambda_param") {
  const TermSum terms = xz_pair();
  const LambdaValue bound = lambda_param(terms, 1, 1, 2, 2, CommutatorMode::kBound);
  CHECK(bound.value == doctest::Approx(8.0));
  CHECK_FALSE(bound.truncated);

  // Bound mode ignores the formula parameters entirely.
  CHECK(lambda_param(terms, 4, 2, 7, 3, CommutatorMode::kBound).value ==
        doctest::Approx(8.0));

  const LambdaValue exact = lambda_param(terms, 1, 1, 2, 2, CommutatorMode::kExact);
  CHECK(exact.truncated);
  CHECK(exact.j_cap == 6);
  CHECK(exact.value > 0.0);
  CHECK(exact.value <= bound.value);
}

TEST_CASE("lambda_param exact mode surfaces untractable commutator sums") {
  const TermSum chain = build_heisenberg_chain(4, 1);  // 13 terms
  LambdaOptions options;
  options.alpha.tuple_cap = 100;
  CHECK_THROWS_AS(lambda_param(chain, 2, 2, 1, 1, CommutatorMode::kExact, options),
                  ResourceLimitError);
}

TEST_CASE("lambda_param bound dominates exact on every instance tried") {
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    const TermSum chain = build_heisenberg_chain(2, seed);
    const double bound = lambda_param(chain, 2, 2, 1, 2, CommutatorMode::kBound).value;
    LambdaOptions options;
    options.j_cap = 4;
    const double exact =
        lambda_param(chain, 2, 2, 1, 2, CommutatorMode::kExact, options).value;
    CHECK(exact <= bound * (1 + 1e-12));
  }
}

TEST_CASE("project_terms") {
  const TermSum terms = xz_pair();
  SUBCASE("identity projector leaves terms unchanged") {
    const TermSum projected = project_terms(terms, SymmetryProjector(Matrix::Identity(2, 2)));
    for (int g = 0; g < terms.size(); ++g) {
      CHECK((projected.term(g) - terms.term(g)).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
  SUBCASE("zero projector kills every norm") {
    const TermSum projected = project_terms(terms, SymmetryProjector(Matrix::Zero(2, 2)));
    CHECK(sum_of_term_norms(projected) == 0.0);
  }
  SUBCASE("projector onto |0>") {
    Matrix pi = Matrix::Zero(2, 2);
    pi(0, 0) = 1.0;
    const TermSum projected = project_terms(terms, SymmetryProjector(pi));
    CHECK(sum_of_term_norms(projected) == doctest::Approx(1.0));  // 0 from X, 1 from Z
  }
  SUBCASE("idempotent on term norms") {
    Matrix pi = Matrix::Zero(2, 2);
    pi(0, 0) = 1.0;
    const SymmetryProjector projector(pi);
    const TermSum once = project_terms(terms, projector);
    const TermSum twice = project_terms(once, projector);
    for (int g = 0; g < terms.size(); ++g) {
      CHECK(spectral_norm(once.term(g)) ==
            doctest::Approx(spectral_norm(twice.term(g))).epsilon(1e-12));
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(project_terms(terms, SymmetryProjector(Matrix::Identity(4, 4))),
                    std::invalid_argument);
  }
  SUBCASE("invalid projectors rejected") {
    CHECK_THROWS_AS(SymmetryProjector(2.0 * Matrix::Identity(2, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("term sum validation") {
  Matrix not_hermitian(2, 2);
  not_hermitian << 0, 1, 0, 0;
  CHECK_THROWS_AS(TermSum(1, {not_hermitian}), std::invalid_argument);
  CHECK_THROWS_AS(TermSum(2, {pauli_x()}), std::invalid_argument);
}
