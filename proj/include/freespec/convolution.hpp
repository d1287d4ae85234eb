#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "freespec/rank.hpp"

namespace freespec {

using cplx = std::complex<double>;

/// Value of a transform evaluated through a principal square root, with a flag
/// set when a radicand lies within `kBranchCutGuard` of the negative real axis.
struct BranchValue {
  cplx value;
  bool near_branch_cut = false;
};

constexpr double kBranchCutGuard = 1e-12;

/// R_{a1}(y) = (sqrt(1 + 4y(y + kappa)) - 1)/(2y); series around y = 0 for |y| < 1e-6.
BranchValue r_transform_a1(const RankParam& rank, cplx y);

/// R_{-a2}(y) = -R_{a2}(-y) = (sqrt(1 + 4y(y - kappa)) - 1)/(2y).
BranchValue r_transform_minus_a2(const RankParam& rank, cplx y);

/// R(y) = (R_{a1}(y) + R_{-a2}(y))/2, the R-transform of the 1/2-fold free
/// convolution power of a1 - a2.
BranchValue r_transform_half(const RankParam& rank, cplx y);

/// K(y) = R(y) + 1/y.
cplx k_transform(const RankParam& rank, cplx y);

/// Free cumulants (c_k(a1) + c_k(-a2))/2 and the moments they generate,
/// both indexed 0..n_max (index 0: unused / m_0 = 1). n_max <= 12.
std::vector<Rational> half_convolution_cumulants(const RankParam& rank, int n_max);
std::vector<Rational> half_convolution_moments(const RankParam& rank, int n_max);

/// Coefficients of y^3 - h1 y^2 + h2 y - h3 = 0 at z:
///   h1 = (2z^2 - 1)/(z(z^2 - 1)), h2 = (5z^2 + eps - 1)/(4z^2(z^2 - 1)), h3 = 1/(4z(z^2 - 1)).
struct Cubic {
  cplx h1, h2, h3;

  cplx operator()(cplx y) const { return ((y - h1) * y + h2) * y - h3; }
  cplx derivative(cplx y) const { return (3.0 * y - 2.0 * h1) * y + h2; }
};

Cubic cubic_at(const RankParam& rank, cplx z);

/// All three roots by Cardano's formula, each polished by Newton steps.
std::array<cplx, 3> solve_cubic(const Cubic& c);

/// Relative deviations of the root sum, pairwise sum and product from h1, h2, h3.
std::array<double, 3> vieta_residuals(const Cubic& c, const std::array<cplx, 3>& roots);

/// Residual of u^3 + 3u - Q = 0 with u = (3y - h1)/sqrt(3h2 - h1^2) and
/// Q = (2h1^3 - 9h1h2 + 27h3)/sqrt(3h2 - h1^2)^3.
double reduced_form_residual(const Cubic& c, cplx y);

class RootTrackingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cauchy transform of the 1/2-fold convolution: the root of the cubic that is
/// continued from y ~ 1/z at z = 10^3 along a path avoiding the real segment
/// [-10, 10]. Valid for Im z != 0 or real |z| >= 2.5. Throws
/// RootTrackingError when two roots come too close to tell apart.
cplx cauchy_via_cubic(const RankParam& rank, cplx z);

/// Continues a root of the cubic from (z_from, y_from) to z_to along the segment.
cplx track_root(const RankParam& rank, cplx z_from, cplx y_from, cplx z_to);

/// Laurent coefficients m_0..m_{n_max} of cauchy_via_cubic at infinity,
/// G(z) = sum_k m_k z^{-k-1}, from a trapezoid rule on |z| = radius.
std::vector<cplx> laurent_moments(const RankParam& rank, int n_max, double radius = 4.0,
                                  int nodes = 256);

}  // namespace freespec
