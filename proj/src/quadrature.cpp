#include "freespec/quadrature.hpp"

#include <cmath>

namespace freespec::quad {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  // Start from a few panels so that oscillatory integrands are not
  // accepted on a coincidental first estimate.
  constexpr int kPanels = 16;
  const double h = (b - a) / kPanels;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double x0 = a + i * h;
    const double x1 = (i + 1 == kPanels) ? b : x0 + h;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = f(x0), f1 = f(x1), fm = f(xm);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += simpson_step(f, x0, f0, x1, f1, xm, fm, whole, tol / kPanels, max_depth);
  }
  return total;
}

double integrate_sqrt_endpoints(const std::function<double(double)>& f, double a, double b,
                                double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double width = std::sqrt(m - a);
  const auto left = [&](double u) { return 2.0 * u * f(a + u * u); };
  const auto right = [&](double u) { return 2.0 * u * f(b - u * u); };
  return adaptive_simpson(left, 0.0, width, 0.5 * tol) +
         adaptive_simpson(right, 0.0, width, 0.5 * tol);
}

}  // namespace freespec::quad
