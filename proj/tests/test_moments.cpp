#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "freespec/moments.hpp"
#include "freespec/orthopoly.hpp"
#include "oracles.hpp"

using namespace freespec;

namespace {

const Rational kThetas[] = {Rational(1, 2), Rational(3, 4), Rational(4, 5), Rational(1)};

Poly scale_argument(const Poly& p, const Rational& c) {
  return p.compose(Poly({Rational(0), c}));
}

}  // namespace

TEST_CASE("s_1 and s_2 closed forms") {
  const RankParam rank(Rational(3, 4));
  const Rational eps = rank.eps();
  REQUIRE(eps == Rational(1, 4));
  const auto table = solve_recursion(rank, 2);
  CHECK(table.s(1) == ExpPoly(1, Poly::constant(eps)) + ExpPoly::constant(Rational(1) - eps));

  // Integrating s_2' = -2 s_1^2 + 4 eps e^{2t} by hand:
  // (2eps - eps^2) e^{2t} - 4 eps (1-eps) e^t - 2 (1-eps)^2 t + (1-eps)(1+3eps).
  const Rational one(1);
  ExpPoly expected = ExpPoly(2, Poly::constant(Rational(2) * eps - eps * eps));
  expected += ExpPoly(1, Poly::constant(Rational(-4) * eps * (one - eps)));
  expected += ExpPoly(0, Poly({(one - eps) * (one + Rational(3) * eps),
                               Rational(-2) * (one - eps) * (one - eps)}));
  CHECK(table.s(2) == expected);
}

TEST_CASE("eps = 0 reproduces the Laguerre moments of free unitary Brownian motion") {
  const auto table = solve_recursion(RankParam(Rational(1, 2)), 12);
  for (int n = 1; n <= 12; ++n) {
    const Poly expected =
        scale_argument(oracle::laguerre_explicit(n - 1), Rational(2 * n)) *
        (Rational(1) / Rational(n));
    CHECK(table.s(n) == ExpPoly(0, expected));
  }
}

TEST_CASE("table invariants") {
  for (const auto& theta : kThetas) {
    const RankParam rank(theta);
    const auto table = solve_recursion(rank, 10);
    for (int n = 1; n <= 10; ++n) {
      const ExpPoly& s = table.s(n);
      CHECK(s.at_zero() == Rational(1));
      CHECK(s.max_frequency() <= n);
      CHECK(s.min_frequency() >= 0);
      const Poly lead = s.part(n);
      CHECK(lead.degree() <= 0);
      if (rank.eps() != Rational(0)) CHECK(s.max_frequency() == n);
    }
  }
}

TEST_CASE("the table depends on kappa only through eps") {
  const auto a = solve_recursion(RankParam(Rational(4, 5)), 8);
  const auto b = solve_recursion(RankParam(Rational(1, 5)), 8);
  for (int n = 1; n <= 8; ++n) CHECK(a.s(n) == b.s(n));
}

TEST_CASE("eps = 1 degenerates to s_n = e^{nt}") {
  const auto table = solve_recursion(RankParam(Rational(1)), 10);
  for (int n = 1; n <= 10; ++n) CHECK(table.s(n) == ExpPoly(n, Poly::constant(Rational(1))));
}

TEST_CASE("frequency-0 part obeys the homogeneous recursion") {
  const RankParam rank(Rational(4, 5));
  const auto table = solve_recursion(rank, 8);
  CHECK(table.s(1).part(0) == Poly::constant(Rational(1) - rank.eps()));
  for (int n = 2; n <= 8; ++n) {
    Poly conv;
    for (int j = 1; j < n; ++j) conv += table.s(j).part(0) * table.s(n - j).part(0);
    CHECK(table.s(n).part(0).derivative() == conv * Rational(-n));
    CHECK(table.s(n).part(0).degree() == n - 1);
  }
}

TEST_CASE("r_moment") {
  const RankParam rank(Rational(3, 4));
  const auto table = solve_recursion(rank, 6);
  for (double t : {0.0, 0.3, 1.0, 2.5}) {
    CHECK(r_moment(table, 1, t) == doctest::Approx(0.25 + 0.75 * std::exp(-t)).epsilon(1e-15));
  }
  for (int n = 1; n <= 6; ++n) CHECK(r_moment(table, n, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  // Large t approaches the e^{nt} coefficient.
  for (int n = 1; n <= 6; ++n) {
    CHECK(r_moment(table, n, 40.0) ==
          doctest::Approx(table.s(n).part(n).coeff(0).to_double()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(r_moment(table, 7, 1.0), std::out_of_range);
  CHECK_THROWS_AS(r_moment(table, 0, 1.0), std::out_of_range);
  CHECK_THROWS_AS(solve_recursion(rank, 0), std::invalid_argument);
}

TEST_CASE("Herglotz series") {
  const RankParam rank(Rational(3, 4));
  const auto table = solve_recursion(rank, 12);
  const std::complex<double> z(0.2, -0.1);
  CHECK(std::abs(herglotz_series(table, 0.7, 0.0, 12) - 1.0) == 0.0);
  // t = 0: (1+z)/(1-z), up to the geometric tail 2|z|^13/(1-|z|).
  CHECK(std::abs(herglotz_series(table, 0.0, z, 12) - (1.0 + z) / (1.0 - z)) < 1e-8);
  CHECK_THROWS_AS(herglotz_series(table, 0.5, std::complex<double>(1.0, 0.0), 12),
                  std::domain_error);
  CHECK_THROWS_AS(herglotz_series(table, 0.5, z, 13), std::out_of_range);

  // eps = 0: Herglotz transform of the law of Y_{2t}, moments e^{-kt} L_{k-1}^{(1)}(2kt)/k.
  const auto half = solve_recursion(RankParam(Rational(1, 2)), 12);
  const double t = 0.4;
  std::complex<double> direct = 1.0;
  for (int k = 1; k <= 12; ++k) {
    const long double lag = laguerre_l1(static_cast<unsigned>(k - 1))(2.0L * k * t);
    direct += 2.0 * static_cast<double>(std::exp(-k * t) * lag / k) * std::pow(z, k);
  }
  CHECK(std::abs(herglotz_series(half, t, z, 12) - direct) < 1e-14);
}

TEST_CASE("coefficientwise PDE check passes exactly") {
  for (const auto& theta : kThetas) {
    const auto table = solve_recursion(RankParam(theta), 10);
    for (const auto& c : check_pde_coefficients(table)) CHECK(c.passed);
  }
}

TEST_CASE("coefficientwise PDE check detects a corrupted moment") {
  // r_1 = eps + (1-eps) e^{-t} solves r_1' = -r_1 + eps; perturbing the
  // constant breaks it.
  const RankParam rank(Rational(3, 4));
  const auto table = solve_recursion(rank, 1);
  const ExpPoly r1 = table.r(1);
  const ExpPoly bad = r1 + ExpPoly::constant(Rational(1, 100));
  CHECK(r1.derivative() == r1 * Rational(-1) + ExpPoly::constant(rank.eps()));
  CHECK_FALSE(bad.derivative() == bad * Rational(-1) + ExpPoly::constant(rank.eps()));
}

TEST_CASE("numerical moment integration agrees with the exact table") {
  for (const auto& theta : kThetas) {
    const RankParam rank(theta);
    const auto table = solve_recursion(rank, 12);
    for (double t : {0.1, 0.5, 2.0}) {
      const auto numeric = integrate_moments(rank, t, 12);
      for (int n = 1; n <= 12; ++n) {
        CHECK(numeric[static_cast<std::size_t>(n - 1)] ==
              doctest::Approx(r_moment(table, n, t)).epsilon(1e-11));
      }
    }
  }
}
