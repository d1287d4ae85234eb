#include "freespec/orthopoly.hpp"

namespace freespec {

// P_n^{(1,0)}(x) = (n+1) * 2F1(-n, n+2; 2; (1-x)/2), expanded in powers of x.
Poly jacobi_p10(unsigned n) {
  const Poly u({Rational(1, 2), Rational(-1, 2)});  // (1 - x)/2
  const long nn = static_cast<long>(n);
  Poly series;
  Poly u_pow = Poly::constant(Rational(1));
  for (unsigned k = 0; k <= n; ++k) {
    const Rational term = pochhammer(Rational(-nn), k) * pochhammer(Rational(nn + 2), k) /
                          (pochhammer(Rational(2), k) * factorial(k));
    series += u_pow * term;
    u_pow = u_pow * u;
  }
  return series * Rational(nn + 1);
}

// L_n^{(1)}(x) = sum_k (-1)^k C(n+1, n-k) x^k / k!
Poly laguerre_l1(unsigned n) {
  const long nn = static_cast<long>(n);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Rational v = binomial(nn + 1, nn - static_cast<long>(k)) / factorial(k);
    c[k] = (k % 2 == 0) ? v : -v;
  }
  return Poly(std::move(c));
}

}  // namespace freespec
