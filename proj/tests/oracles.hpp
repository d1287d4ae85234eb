#pragma once

// Reference values computed without the library's own routes.

#include <cmath>
#include <vector>

#include "freespec/poly.hpp"
#include "freespec/rational.hpp"

namespace oracle {

using freespec::Poly;
using freespec::Rational;

// Taylor coefficients f_0..f_n of sqrt(1 + 4 eps z / (1 - z)^2), from f^2 = 1 + w, w_k = 4 eps k.
// The stationary moments are f_n / 2.
inline std::vector<Rational> sqrt_series(const Rational& eps, int n) {
  std::vector<Rational> f(static_cast<std::size_t>(n + 1), Rational(0));
  f[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    Rational acc = Rational(4 * k) * eps;
    for (int j = 1; j < k; ++j) acc -= f[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(k - j)];
    f[static_cast<std::size_t>(k)] = acc / Rational(2);
  }
  return f;
}

// L_n^{(1)}(x) = sum_j (-1)^j C(n+1, n-j) x^j / j!
inline Poly laguerre_explicit(int n) {
  std::vector<Rational> c;
  Rational fact(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) fact *= Rational(j);
    const Rational term = freespec::binomial(n + 1, n - j) / fact;
    c.push_back(j % 2 ? -term : term);
  }
  return Poly(std::move(c));
}

// 4^{-n} sum_{k=1}^n C(2n, n-k) 2 cos(k phi), in long double
inline long double cosine_kernel_lhs(int n, long double phi) {
  long double w = 1.0L, sum = 0.0L;  // w = C(2n, n-k) / 4^n, starting from k = n
  for (int i = 0; i < n; ++i) w /= 4.0L;
  for (int k = n; k >= 1; --k) {
    sum += w * 2.0L * std::cos(k * phi);
    w *= static_cast<long double>(n + k) / static_cast<long double>(n - k + 1);
  }
  return sum;
}

}  // namespace oracle
