#include "freespec/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace freespec::roots {

RootResult bisect_newton(const std::function<double(double)>& f,
                         const std::function<double(double)>& df, double lo, double hi,
                         double bisect_tol, int max_newton) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, 0.0, 0, true};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw std::domain_error("bisect_newton: root not bracketed");
  }

  RootResult res;
  while (hi - lo > bisect_tol * std::max(1.0, std::abs(lo)) && res.iterations < 400) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    ++res.iterations;
    if (fm == 0.0) return {mid, 0.0, res.iterations, true};
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }

  double x = 0.5 * (lo + hi);
  double fx = f(x);
  for (int i = 0; i < max_newton; ++i) {
    const double d = df(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    const double next = x - fx / d;
    if (!(next >= lo && next <= hi)) break;
    const double fnext = f(next);
    ++res.iterations;
    if (std::abs(fnext) > std::abs(fx)) break;
    const bool stalled = next == x;
    x = next;
    fx = fnext;
    if (stalled || fx == 0.0) break;
  }
  res.x = x;
  res.f = fx;
  res.converged = true;
  return res;
}

}  // namespace freespec::roots
