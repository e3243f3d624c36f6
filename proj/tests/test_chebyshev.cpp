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
#include <vector>

#include "qextrap/chebyshev.hpp"
#include "qextrap/errors.hpp"
#include "qextrap/evolution.hpp"
#include "qextrap/rng.hpp"

using namespace qextrap;

namespace {

std::vector<double> chebyshev_nodes(int m, double ell) {
  std::vector<double> nodes;
  for (int i = 1; i <= m; ++i) {
    nodes.push_back(ell * std::cos(kPi * (2.0 * i - 1.0) / (2.0 * m)));
  }
  return nodes;
}

// Direct Lagrange evaluation at 0, the independent oracle for the barycentric
// formula.
double lagrange_at_zero_direct(std::span<const double> nodes,
                               std::span<const double> values) {
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double cardinal = 1.0;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      if (n != i) cardinal *= (0.0 - nodes[n]) / (nodes[i] - nodes[n]);
    }
    total += cardinal * values[i];
  }
  return total;
}

}  // namespace

TEST_CASE("choose_ell") {
  bool clamped = false;
  // Unit base sits exactly at the clamp value.
  CHECK(choose_ell(1.0, 1, 1.0, 1.0, 1, &clamped) == doctest::Approx(0.5));
  CHECK_FALSE(clamped);
  CHECK(choose_ell(0.25, 1, 1.0, 1.0, 2, &clamped) == 0.5);
  CHECK(clamped);
  // p -> infinity limit approaches (1/2) base^{-1}.
  CHECK(choose_ell(2.0, 1, 1.0, 1.0, 1000) ==
        doctest::Approx(0.25).epsilon(1e-3));
  CHECK(choose_ell(2.0, 1, 1.0, 1.0, 2) ==
        doctest::Approx(0.5 * std::pow(2.0, -1.5)).epsilon(1e-12));
  CHECK_THROWS_AS(choose_ell(0.0, 1, 1.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(choose_ell(1.0, 1, 1.0, -1.0, 2), std::invalid_argument);
}

TEST_CASE("choose_ell_snapped") {
  for (double base : {0.5, 1.0, 2.0, 8.0}) {
    for (int m : {2, 4, 8}) {
      const double ell = choose_ell_snapped(base, 1, 1.0, 1.0, 2, m);
      CHECK(ell <= choose_ell(base, 1, 1.0, 1.0, 2));
      if (base >= 1.0) {
        CHECK(ell * m * m * lebesgue_bound(m) * std::pow(base, 1.5) <= 1.0 + 1e-12);
      }
    }
  }
  const double l8 = lebesgue_bound(8);
  CHECK(choose_ell_snapped(2.0, 1, 1.0, 1.0, 2, 8) ==
        doctest::Approx(1.0 / (std::pow(2.0, 1.5) * 64.0 * l8)).epsilon(1e-12));
  CHECK_THROWS_AS(choose_ell_snapped(2.0, 1, 1.0, 1.0, 2, 3), std::invalid_argument);
}

TEST_CASE("snap_nodes") {
  SUBCASE("exact inverse integer") {
    const std::array<double, 1> s = {0.25};
    CHECK(snap_nodes(s).nodes == std::vector<long long>{4});
  }
  SUBCASE("nearest inverse integer wins") {
    const std::array<double, 1> s = {0.3};
    CHECK(snap_nodes(s).nodes == std::vector<long long>{3});
  }
  SUBCASE("sign symmetry") {
    const auto nodes = chebyshev_nodes(6, 0.1);
    const SnappedNodes snapped = snap_nodes(nodes);
    for (int i = 0; i < 3; ++i) {
      CHECK(snapped.nodes[static_cast<std::size_t>(i)] ==
            -snapped.nodes[static_cast<std::size_t>(5 - i)]);
    }
  }
  SUBCASE("collisions move the later node outward") {
    const std::array<double, 2> s = {0.26, 0.25};
    const SnappedNodes snapped = snap_nodes(s);
    CHECK(snapped.nodes == std::vector<long long>{4, 5});
  }
  SUBCASE("cap enforced") {
    const std::array<double, 1> s = {1e-9};
    CHECK_THROWS_AS(snap_nodes(s), ResourceLimitError);
  }
  SUBCASE("zero and oversized nodes rejected") {
    const std::array<double, 1> zero = {0.0};
    CHECK_THROWS_AS(snap_nodes(zero), std::invalid_argument);
    const std::array<double, 1> big = {0.75};
    CHECK_THROWS_AS(snap_nodes(big), std::invalid_argument);
  }
}

TEST_CASE("interpolate_at_zero") {
  SplitMix64 rng(17);
  SUBCASE("polynomial exactness") {
    for (int m : {3, 6, 9}) {
      const auto nodes = chebyshev_nodes(m, 0.4);
      std::vector<double> coefficients(static_cast<std::size_t>(m));
      for (auto& c : coefficients) c = rng.uniform(-1, 1);
      std::vector<double> values;
      for (double s : nodes) {
        double value = 0.0, power = 1.0;
        for (double c : coefficients) {
          value += c * power;
          power *= s;
        }
        values.push_back(value);
      }
      CHECK(interpolate_at_zero(nodes, values) ==
            doctest::Approx(coefficients[0]).epsilon(1e-10));
    }
  }
  SUBCASE("constants pass through") {
    const auto nodes = chebyshev_nodes(4, 0.3);
    const std::vector<double> values(4, 2.5);
    CHECK(interpolate_at_zero(nodes, values) == doctest::Approx(2.5).epsilon(1e-13));
  }
  SUBCASE("s^m tail matches the direct Lagrange oracle") {
    for (int m : {4, 8, 12}) {
      const auto nodes = chebyshev_nodes(m, 1.0);
      std::vector<double> values;
      for (double s : nodes) values.push_back(std::pow(s, m));
      const double via_barycentric = interpolate_at_zero(nodes, values);
      const double via_lagrange = lagrange_at_zero_direct(nodes, values);
      CHECK(via_barycentric == doctest::Approx(via_lagrange).epsilon(1e-9));
    }
  }
  SUBCASE("zero node short-circuits") {
    const std::array<double, 3> nodes = {0.5, 0.0, -0.5};
    const std::array<double, 3> values = {1.0, 42.0, 3.0};
    CHECK(interpolate_at_zero(nodes, values) == 42.0);
  }
  SUBCASE("duplicate nodes rejected") {
    const std::array<double, 2> nodes = {0.5, 0.5};
    const std::array<double, 2> values = {1.0, 2.0};
    CHECK_THROWS_AS(interpolate_at_zero(nodes, values), std::invalid_argument);
  }
}

TEST_CASE("lebesgue constants") {
  SUBCASE("single node") {
    const std::array<double, 1> nodes = {0.3};
    CHECK(lebesgue_constant(nodes, 1000) == 1.0);
  }
  SUBCASE("exact Chebyshev nodes satisfy the log bound") {
    for (int m : {2, 4, 8}) {
      const auto nodes = chebyshev_nodes(m, 1.0);
      CHECK(lebesgue_constant(nodes, 100'000) <= lebesgue_bound(m));
    }
  }
  SUBCASE("snapped nodes stay within twice the exact value") {
    const double ell = choose_ell_snapped(2.0, 1, 1.0, 1.0, 2, 8);
    const InterpolationPlan plan = make_interpolation_plan(8, ell);
    const double exact_value = lebesgue_constant(plan.raw_nodes, 100'000);
    CHECK(plan.lebesgue <= 2.0 * exact_value);
  }
  SUBCASE("grid floor") {
    const std::array<double, 2> nodes = {0.1, -0.1};
    CHECK_THROWS_AS(lebesgue_constant(nodes, 10), std::invalid_argument);
  }
}

TEST_CASE("interpolation plan invariants") {
  const InterpolationPlan plan = make_interpolation_plan(6, 0.01);
  CHECK(plan.raw_nodes.size() == 6);
  CHECK(plan.snapped_nodes.size() == 6);
  CHECK(plan.max_perturbation <= 0.01 * 0.01);
  CHECK(plan.lebesgue >= 1.0);
  CHECK_THROWS_AS(make_interpolation_plan(5, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(make_interpolation_plan(6, 0.9), std::invalid_argument);
}

TEST_CASE("interpolation error bound on the Trotter expectation") {
  // f evaluated at exact (fractional) Chebyshev nodes through the effective
  // Hamiltonian realization of P^{1/s}(sT).
  Matrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  const TermSum terms(1, {x, z});
  const StagedFormula s2 = suzuki(1, 2);
  Vector amp(2);
  amp << 1, 0;
  const StateVector psi(amp);
  const Observable obs(z);
  const double lambda = 4.0 * sum_of_term_norms(terms);  // 16
  const double T = 0.25;  // base = lambda T = 4 > 1
  const double base = s2.a_max * s2.stages * lambda * T;
  REQUIRE(base > 1.0);
  const double ell = choose_ell(s2.a_max, s2.stages, lambda, T, s2.order);

  const auto fractional_f = [&](double s) {
    const Matrix h_eff = effective_hamiltonian(s2, terms, s * T);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h_eff);
    const Vector phases =
        (Complex(0, -T) * solver.eigenvalues().cast<Complex>().array()).exp().matrix();
    const Vector evolved =
        solver.eigenvectors() *
        (phases.array() * (solver.eigenvectors().adjoint() * psi.amplitudes).array())
            .matrix();
    return evolved.dot(obs.matrix * evolved).real();
  };
  const double f0 = exact_evolve_expectation(terms, T, psi, obs);
  for (int m : {4, 6, 8}) {
    const auto nodes = chebyshev_nodes(m, ell);
    std::vector<double> values;
    for (double s : nodes) values.push_back(fractional_f(s));
    const double estimate = interpolate_at_zero(nodes, values);
    CHECK(std::abs(estimate - f0) <= 11.0 * std::exp(-1.5 * m) * obs.norm);
  }
}

TEST_CASE("noise amplification equals the Lebesgue weight sum at zero") {
  const auto nodes = chebyshev_nodes(6, 0.2);
  const std::vector<double> clean(6, 0.5);
  const auto cardinal = lagrange_at_zero(nodes);
  double amplification = 0.0;
  for (double c : cardinal) amplification += std::abs(c);
  const double eps = 1e-7;
  std::vector<double> noisy = clean;
  for (std::size_t i = 0; i < noisy.size(); ++i) {
    noisy[i] += eps * (cardinal[i] >= 0 ? 1.0 : -1.0);
  }
  const double shift =
      std::abs(interpolate_at_zero(nodes, noisy) - interpolate_at_zero(nodes, clean));
  CHECK(shift == doctest::Approx(amplification * eps).epsilon(1e-9));
}

TEST_CASE("snapping perturbation bound over plan sizes") {
  for (double ell : {0.01, 0.05, 0.2}) {
    for (int m : {4, 8}) {
      const InterpolationPlan plan = make_interpolation_plan(m, ell);
      for (std::size_t i = 0; i < plan.raw_nodes.size(); ++i) {
        const double s = 1.0 / static_cast<double>(plan.snapped_nodes[i]);
        CHECK(std::abs(s - plan.raw_nodes[i]) <= ell * ell);
      }
    }
  }
}
