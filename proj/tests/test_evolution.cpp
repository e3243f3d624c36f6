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

#include <cmath>

#include "qextrap/errors.hpp"
#include "qextrap/evolution.hpp"

using namespace qextrap;

namespace {

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

TermSum xz_pair() { return TermSum(1, {pauli_x(), pauli_z()}); }

StateVector ket0() {
  Vector v(2);
  v << 1, 0;
  return StateVector(v);
}

}  // namespace

TEST_CASE("exact evolution expectation") {
  const TermSum terms = xz_pair();
  const Observable z(pauli_z());
  const StateVector psi = ket0();
  SUBCASE("T = 0 is the bare expectation") {
    CHECK(exact_evolve_expectation(terms, 0.0, psi, z) == doctest::Approx(1.0));
  }
  SUBCASE("identity observable is conserved") {
    const Observable identity(Matrix::Identity(2, 2));
    for (double T : {0.3, 1.7}) {
      CHECK(exact_evolve_expectation(terms, T, psi, identity) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("energy is conserved") {
    const Observable h(terms.total());
    const double at0 = exact_evolve_expectation(terms, 0.0, psi, h);
    for (double T : {0.5, 2.0}) {
      CHECK(exact_evolve_expectation(terms, T, psi, h) ==
            doctest::Approx(at0).epsilon(1e-12));
    }
  }
}

TEST_CASE("trotter expectation") {
  const TermSum terms = xz_pair();
  const StagedFormula p1 = first_order(2);
  const StagedFormula s2 = suzuki(1, 2);
  const Observable z(pauli_z());
  const StateVector psi = ket0();
  const double T = 1.0;
  const double exact = exact_evolve_expectation(terms, T, psi, z);

  SUBCASE("r = 0 rejected") {
    CHECK_THROWS_AS(trotter_expectation(p1, terms, 0, T, psi, z),
                    std::invalid_argument);
  }
  SUBCASE("converges toward the exact value") {
    const double coarse = std::abs(trotter_expectation(p1, terms, 64, T, psi, z) - exact);
    const double fine = std::abs(trotter_expectation(p1, terms, 4096, T, psi, z) - exact);
    CHECK(fine < coarse);
    CHECK(fine < 1e-3);
  }
  SUBCASE("first-order error roughly halves from r=10 to r=20") {
    // A complex-amplitude state; real states on these real terms make f(s)
    // accidentally even and the error quarters instead of halving.
    Vector amp(2);
    amp << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
    const StateVector probe(amp);
    const double reference = exact_evolve_expectation(terms, T, probe, z);
    const double e10 =
        std::abs(trotter_expectation(p1, terms, 10, T, probe, z) - reference);
    const double e20 =
        std::abs(trotter_expectation(p1, terms, 20, T, probe, z) - reference);
    CHECK(e10 / e20 == doctest::Approx(2.0).epsilon(0.25));
  }
  SUBCASE("symmetric formula is even in the step sign") {
    for (long long r : {3, 5, 8}) {
      CHECK(std::abs(trotter_expectation(s2, terms, r, T, psi, z) -
                     trotter_expectation(s2, terms, -r, T, psi, z)) <= 1e-10);
    }
  }
  SUBCASE("matrix route agrees with the state route") {
    for (long long r : {7, -7}) {
      const Matrix u = iterated_unitary(p1, terms, r, T);
      const Vector evolved = u * psi.amplitudes;
      const double via_matrix = (evolved.dot(z.matrix * evolved)).real();
      CHECK(std::abs(trotter_expectation(p1, terms, r, T, psi, z) - via_matrix) <=
            1e-10);
    }
  }
  SUBCASE("norm preservation and |f| <= |O|") {
    for (long long r : {3, 11, 57}) {
      const StateVector evolved = trotter_evolve(s2, terms, r, 3.0, psi);
      CHECK(std::abs(evolved.amplitudes.norm() - 1.0) <= 1e-10);
      CHECK(std::abs(trotter_expectation(s2, terms, r, 3.0, psi, z)) <=
            z.norm + 1e-12);
    }
  }
}

TEST_CASE("taylor coefficients by finite differences") {
  const TermSum terms = xz_pair();
  const Observable z(pauli_z());
  const StateVector psi = ket0();
  SUBCASE("symmetric formula has vanishing odd coefficients") {
    const auto fit =
        taylor_coefficients_fd(suzuki(1, 2), terms, 1.0, psi, z, 6, 0.02);
    REQUIRE(fit.coefficients.size() == 6);
    CHECK(std::abs(fit.coefficients[0]) <= 1e-6);
    CHECK(std::abs(fit.coefficients[2]) <= 1e-6);
    CHECK(std::abs(fit.coefficients[4]) <= 1e-6);
  }
  SUBCASE("order-p formula has vanishing coefficients below p") {
    const auto fit =
        taylor_coefficients_fd(suzuki(2, 2), terms, 1.0, psi, z, 4, 0.02);
    for (int j = 1; j < 4; ++j) {
      CHECK(std::abs(fit.coefficients[static_cast<std::size_t>(j - 1)]) <= 1e-6);
    }
  }
  SUBCASE("long-time derivative bound") {
    const StagedFormula s2 = suzuki(1, 2);
    const double lambda =
        lambda_param(terms, 2, 2, 1, 1, CommutatorMode::kBound).value;
    const double base = s2.a_max * s2.stages * lambda * 1.0;
    REQUIRE(base > 1.0);
    const auto fit = taylor_coefficients_fd(s2, terms, 1.0, psi, z, 4, 0.02);
    for (int j = 2; j <= 4; j += 2) {
      const double cap =
          2.0 * z.norm * std::pow(base, j * (1.0 + 1.0 / s2.order));
      CHECK(std::abs(fit.coefficients[static_cast<std::size_t>(j - 1)]) <= cap);
    }
  }
  SUBCASE("degenerate stencil is reported") {
    CHECK_THROWS_AS(
        taylor_coefficients_fd(suzuki(1, 2), terms, 1.0, psi, z, 6, 0.08),
        StencilDegeneracyError);
  }
  SUBCASE("j_max is capped") {
    CHECK_THROWS_AS(
        taylor_coefficients_fd(suzuki(1, 2), terms, 1.0, psi, z, 7, 0.02),
        std::invalid_argument);
  }
}

TEST_CASE("random bitstring state") {
  const StateVector one_qubit = random_bitstring_state(1, 1);
  CHECK(one_qubit.amplitudes.norm() == 1.0);
  // Seed 1 lands on bit 0 for n=1; frozen here to pin the convention that a
  // zero bitstring is the first basis vector.
  CHECK(one_qubit.amplitudes(0) == Complex(1.0, 0.0));

  const StateVector a = random_bitstring_state(5, 99);
  const StateVector b = random_bitstring_state(5, 99);
  CHECK((a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("random pauli observable") {
  const Observable single = random_pauli_observable(3, 1, 4);
  CHECK(single.norm == doctest::Approx(1.0).epsilon(1e-12));
  const Observable triple = random_pauli_observable(6, 3, 21);
  CHECK(hermiticity_residue(triple.matrix) <= 1e-14);
  CHECK(triple.norm <= 3.0 + 1e-12);
}

TEST_CASE("state and observable validation") {
  Vector bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS((void)StateVector(bad), std::invalid_argument);
  Matrix skew(2, 2);
  skew << 0, 1, -1, 0;
  CHECK_THROWS_AS((void)Observable(skew), std::invalid_argument);
}
