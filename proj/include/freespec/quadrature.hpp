#pragma once

#include <functional>

namespace freespec::quad {

/// Adaptive Simpson rule with Richardson correction; `tol` is an absolute
/// error target for the whole interval.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 48);

/// Integral over [a, b] of a function that may have square-root type behaviour
/// at either endpoint. Each half is mapped by x = end -/+ u^2, which turns
/// sqrt(x - a) into a smooth integrand in u.
double integrate_sqrt_endpoints(const std::function<double(double)>& f, double a, double b,
                                double tol = 1e-12);

}  // namespace freespec::quad
