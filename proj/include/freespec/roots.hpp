#pragma once

#include <functional>

namespace freespec::roots {

struct RootResult {
  double x = 0.0;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Bisection on [lo, hi] (f(lo) and f(hi) of opposite sign) down to a relative
/// bracket width of `bisect_tol`, followed by Newton polishing that is kept
/// only while it stays inside the final bracket.
RootResult bisect_newton(const std::function<double(double)>& f,
                         const std::function<double(double)>& df, double lo, double hi,
                         double bisect_tol = 1e-10, int max_newton = 8);

}  // namespace freespec::roots
