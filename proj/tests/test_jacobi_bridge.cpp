#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "freespec/jacobi_bridge.hpp"
#include "freespec/moments.hpp"
#include "freespec/stationary.hpp"

using namespace freespec;

namespace {

// Taylor coefficients of ((2 theta - 1) + sqrt(1 - 4 theta (1 - theta) z))/(2 theta (1 - z)) - 1.
std::vector<Rational> prem_series(const Rational& theta, int n_max) {
  const Rational c = Rational(4) * theta * (Rational(1) - theta);
  std::vector<Rational> root(static_cast<std::size_t>(n_max + 1));
  Rational binom_half(1);  // C(1/2, k)
  Rational power(1);
  for (int k = 0; k <= n_max; ++k) {
    root[static_cast<std::size_t>(k)] = binom_half * power;
    binom_half = binom_half * (Rational(1, 2) - Rational(k)) / Rational(k + 1);
    power = power * -c;
  }
  root[0] += Rational(2) * theta - Rational(1);
  std::vector<Rational> out(static_cast<std::size_t>(n_max + 1));
  Rational partial(0);
  for (int k = 0; k <= n_max; ++k) {
    partial += root[static_cast<std::size_t>(k)];  // division by (1 - z)
    out[static_cast<std::size_t>(k)] = partial / (Rational(2) * theta);
  }
  out[0] -= Rational(1);
  return out;
}

double laguerre_l1_value(int n, double x) {
  double a = 1.0, b = 2.0 - x;
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    const double c = ((2.0 * k + 2.0 - x) * b - (k + 1.0) * a) / (k + 1.0);
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST_CASE("binomial weights") {
  CHECK(jacobi_truncation(10) == 10);
  CHECK(jacobi_truncation(4000) == 459);
  const auto w = binomial_weights(3, 3);
  CHECK(w[0] == doctest::Approx(20.0 / 64.0));
  CHECK(w[3] == doctest::Approx(1.0 / 64.0));
  // exact and log-gamma branches agree at the switch
  const auto lo = binomial_weights(1000, 100);
  const auto hi = binomial_weights(1001, 100);
  for (int k = 0; k <= 100; k += 10) {
    const double ratio = hi[static_cast<std::size_t>(k)] / lo[static_cast<std::size_t>(k)];
    const double expected = (2.0 * 1001 * (2.0 * 1001 - 1)) / (4.0 * (1001.0 - k) * (1001.0 + k));
    CHECK(ratio == doctest::Approx(expected).epsilon(1e-11));
  }
  // sum_{k=-n}^{n} w_k = 1
  const auto big = binomial_weights(4000, 4000);
  double total = big[0];
  for (std::size_t k = 1; k < big.size(); ++k) total += 2.0 * big[k];
  CHECK(total == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("t = 0 gives tau(P) = theta exactly") {
  for (const Rational& theta : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
    const RankParam rank(theta);
    for (int n = 1; n <= 30; ++n) {
      const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
      CHECK(jacobi_moment_exact(rank, n, ones) == theta);
      CHECK(jacobi_moment(rank, 0.0, n) == doctest::Approx(theta.to_double()).epsilon(1e-14));
    }
  }
}

TEST_CASE("stationary limit matches the free Jacobi generating function") {
  for (const Rational& theta : {Rational(3, 4), Rational(1, 3), Rational(1, 2)}) {
    const RankParam rank(theta);
    const auto prem = prem_series(theta, 8);
    std::vector<Rational> r;
    for (int k = 1; k <= 8; ++k) r.push_back(stationary_moment_jacobi(rank, k));
    for (int n = 1; n <= 8; ++n) {
      const Rational v = jacobi_moment_exact(rank, n, r) / theta;
      CHECK(v == prem[static_cast<std::size_t>(n)]);
      // and through the float path at large t
      const double vt = jacobi_moment(rank, 40.0, n) / theta.to_double();
      CHECK(std::abs(vt - prem[static_cast<std::size_t>(n)].to_double()) < 1e-10);
    }
  }
}

TEST_CASE("theta = 1/2 reduces to the two-term formula") {
  const RankParam rank(Rational(1, 2));
  const double t = 0.8;
  const auto r = bridge_moments(rank, t, 40);
  for (int n : {1, 5, 20, 40}) {
    double direct = 0.0;
    for (int k = 1; k <= n; ++k) {
      // at kappa = 0, r_k(t) = e^{-kt} L_{k-1}^{(1)}(2kt)/k
      direct += std::exp(std::lgamma(2.0 * n + 1) - std::lgamma(n - k + 1.0) - std::lgamma(n + k + 1.0) -
                         2.0 * n * std::log(2.0)) *
                std::exp(-k * t) * laguerre_l1_value(k - 1, 2.0 * k * t) / k;
    }
    const double head = std::exp(std::lgamma(2.0 * n + 1) - 2.0 * std::lgamma(n + 1.0) - 2.0 * n * std::log(2.0)) / 2.0;
    CHECK(jacobi_moment(rank, n, r) == doctest::Approx(head + direct).epsilon(1e-10));
  }
}

TEST_CASE("bridge moments are accurate at large order") {
  const RankParam rank(Rational(1, 2));
  const auto r = bridge_moments(rank, 1.0, 460);
  double worst = 0.0;
  for (int k = 1; k <= 460; ++k) {
    const double exact = std::exp(-1.0 * k) * laguerre_l1_value(k - 1, 2.0 * k) / k;
    worst = std::max(worst, std::abs(r[static_cast<std::size_t>(k - 1)] - exact));
  }
  CHECK(worst < 1e-9);
  CHECK_THROWS_AS(jacobi_moment(rank, 4000, std::span<const double>(r.data(), 400)), std::out_of_range);
}

TEST_CASE("cosine kernel identity") {
  for (int n = 1; n <= 20; ++n) {
    for (int i = 0; i < 100; ++i) {
      const double phi = -M_PI + 2.0 * M_PI * i / 99.0;
      const auto ck = cosine_kernel_identity(n, phi);
      CHECK(std::abs(ck.lhs - ck.rhs) < 1e-12);
    }
  }
  const auto one = cosine_kernel_identity(1, 0.7);
  CHECK(one.lhs == doctest::Approx(std::cos(0.7) / 2.0));
  const auto six = cosine_kernel_identity(6, 1.234);
  CHECK(std::abs(six.lhs - six.rhs) < 1e-12);
  const auto zero = cosine_kernel_identity(9, 0.0);
  CHECK(zero.rhs == doctest::Approx(1.0 - binomial_weights(9, 0)[0]));
}

TEST_CASE("moments decrease in n and stay in [0, theta]") {
  for (const Rational& theta : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    const RankParam rank(theta);
    const auto r = bridge_moments(rank, 1.0, jacobi_truncation(400));
    double prev = theta.to_double();
    for (int n = 1; n <= 400; ++n) {
      const double v = jacobi_moment(rank, n, r);
      CHECK(v <= prev + 1e-12);
      CHECK(v >= 0.0);
      CHECK(v / theta.to_double() <= 1.0);
      prev = v;
    }
  }
}

TEST_CASE("general position limit") {
  const std::vector<int> grid = {100, 200, 500, 1000, 2000, 4000};
  for (const Rational& theta : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    const RankParam rank(theta);
    const auto lm = limit_moment(rank, 1.0, grid);
    const double target = std::max(2.0 * theta.to_double() - 1.0, 0.0);
    CHECK(lm.predicted_limit == doctest::Approx(target));
    CHECK(std::abs(lm.value.back() - target) <= 0.02);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double err = std::abs(lm.value[i] - target);
      CHECK(err <= lm.fit_constant / std::sqrt(grid[i]) + 1e-15);
      // below ~1e-8 the remaining error is the integration error of r_k
      if (i > 0) CHECK(err <= std::abs(lm.value[i - 1] - target) + 1e-8);
    }
    MESSAGE("theta=" << theta.str() << " error at n=4000: " << lm.value.back() - target);
  }
  CHECK(corollary_weight(RankParam(Rational(1, 4))) == Rational(0));
  CHECK(corollary_weight(RankParam(Rational(1, 2))) == Rational(0));
  CHECK(corollary_weight(RankParam(Rational(3, 4))) == Rational(2, 3));
  CHECK(corollary_weight(RankParam(Rational(1))) == Rational(1));
}
