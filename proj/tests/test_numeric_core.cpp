#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "freespec/orthopoly.hpp"
#include "freespec/poly.hpp"
#include "freespec/rational.hpp"
#include "oracles.hpp"

using namespace freespec;

TEST_CASE("rational arithmetic is exact and canonical") {
  const Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(a.denominator() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(2, 3) / Rational(4, 9)).str() == "3/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse(" -6/8 ") == Rational(-3, 4));
  CHECK(Rational::parse("0.75") == Rational(3, 4));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("-1.5e-2") == Rational(-3, 200));
  CHECK(Rational::parse("25e-2") == Rational(1, 4));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1.2.3"));
}

TEST_CASE("random rational field axioms") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int i = 0; i < 300; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(Rational::parse(a.str()) == a);
    CHECK(a.denominator() > 0);
    CHECK(gcd(a.numerator(), a.denominator()) == 1);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == Rational(6));
  CHECK(binomial(6, 2) == Rational(15));
  CHECK(binomial(6, 4) == Rational(15));
  CHECK(binomial(5, 7) == Rational(0));
  CHECK(binomial(5, -1) == Rational(0));
  for (long n = 0; n <= 30; ++n) {
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
  // Direct product oracle: (-1/2)(1/2)(3/2).
  CHECK(pochhammer(Rational(-1, 2), 3) == Rational(-1, 2) * Rational(1, 2) * Rational(3, 2));
  CHECK(pochhammer(Rational(-1, 2), 3) == Rational(-3, 8));
}

TEST_CASE("polynomial ring operations") {
  const Poly p({Rational(1), Rational(2)});       // 1 + 2x
  const Poly q({Rational(-1), Rational(0), Rational(3)});  // -1 + 3x^2
  CHECK((p * q) == Poly({Rational(-1), Rational(-2), Rational(3), Rational(6)}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(q.derivative() == Poly({Rational(0), Rational(6)}));
  CHECK(q.antiderivative().derivative() == q);
  CHECK(p.compose(q) == Poly({Rational(-1), Rational(0), Rational(6)}));
  CHECK(q(Rational(1, 2)) == Rational(-1, 4));
  CHECK(static_cast<double>(q(0.5L)) == doctest::Approx(-0.25));
  CHECK(p.str() == "2*x + 1");
}

namespace {

// Three-term recurrence for P_n^{(alpha,beta)} with alpha = 1, beta = 0:
// 2n(n+1)(2n-1) P_n = (2n)[(2n+1)(2n-1) x + 1] P_{n-1} - 2 n (n-1)(2n+1) P_{n-2}
std::vector<Poly> jacobi_by_recurrence(unsigned n_max) {
  const Rational a(1), b(0);
  std::vector<Poly> P{Poly::constant(Rational(1)), Poly({Rational(1, 2), Rational(3, 2)})};
  const Poly x({Rational(0), Rational(1)});
  for (unsigned n = 2; n <= n_max; ++n) {
    const Rational N(static_cast<long>(n));
    const Rational s = Rational(2) * N + a + b;
    const Rational c0 = Rational(2) * N * (N + a + b) * (s - Rational(2));
    const Poly c1 = (s - Rational(1)) * (s * (s - Rational(2)) * x + Poly::constant(a * a - b * b));
    const Rational c2 = Rational(2) * (N + a - Rational(1)) * (N + b - Rational(1)) * s;
    P.push_back((c1 * P[n - 1] - P[n - 2] * c2) * (Rational(1) / c0));
  }
  return P;
}

}  // namespace

TEST_CASE("jacobi_p10 matches the three-term recurrence and the normalization") {
  CHECK(jacobi_p10(0) == Poly::constant(Rational(1)));
  CHECK(jacobi_p10(1) == Poly({Rational(1, 2), Rational(3, 2)}));
  const auto oracle = jacobi_by_recurrence(20);
  for (unsigned n = 0; n <= 20; ++n) {
    const Poly p = jacobi_p10(n);
    CHECK(p == oracle[n]);
    CHECK(p(Rational(1)) == Rational(static_cast<long>(n) + 1));
    CHECK(p.degree() == static_cast<int>(n));
  }
}

TEST_CASE("laguerre_l1 satisfies the three-term recurrence") {
  CHECK(laguerre_l1(0) == Poly::constant(Rational(1)));
  CHECK(laguerre_l1(1) == Poly({Rational(2), Rational(-1)}));
  const Poly x({Rational(0), Rational(1)});
  for (unsigned n = 1; n < 20; ++n) {
    const Rational N(static_cast<long>(n));
    // (n+1) L_{n+1} = (2n + 2 - x) L_n - (n + 1) L_{n-1}
    const Poly lhs = laguerre_l1(n + 1) * (N + Rational(1));
    const Poly rhs = (Poly::constant(Rational(2) * N + Rational(2)) - x) * laguerre_l1(n) -
                     laguerre_l1(n - 1) * (N + Rational(1));
    CHECK(lhs == rhs);
  }
  for (unsigned k = 1; k <= 20; ++k) {
    // Constant term of (1/k) L_{k-1}^{(1)} is 1.
    CHECK(laguerre_l1(k - 1).coeff(0) / Rational(static_cast<long>(k)) == Rational(1));
  }
}

TEST_CASE("laguerre_l1 matches the explicit sum") {
  for (int n = 0; n <= 20; ++n) CHECK(laguerre_l1(static_cast<unsigned>(n)) == oracle::laguerre_explicit(n));
}
