#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "freespec/rank.hpp"

namespace freespec {

/// Point mass at e^{i angle}.
struct Atom {
  double angle = 0.0;
  Rational weight;
};

/// Closed arc {e^{i phi} : begin <= phi <= end}; angles in radians.
struct Arc {
  double begin = 0.0;
  double end = 0.0;
};

/// Probability measure on the unit circle: atoms plus a density with respect
/// to the normalized Haar measure dphi / (2 pi), supported on `support`.
struct CircleMeasure {
  std::vector<Atom> atoms;
  std::function<double(double)> density;
  std::vector<Arc> support;

  double atom_mass() const;
  /// (1/2pi) * integral of g(phi) * density(phi) over the support.
  double integrate_density(const std::function<double(double)>& g, double tol = 1e-13) const;
  double total_mass() const;
  /// Real part of the n-th moment, int z^n dmu; the imaginary part vanishes
  /// for conjugation-invariant measures.
  double moment(int n) const;
};

/// H_infinity(z) = sqrt(1 + 4 kappa^2 z / (1 - z)^2), principal branch, |z| < 1.
std::complex<double> herglotz_stationary(const RankParam& rank, std::complex<double> z);

/// Lebesgue decomposition of the stationary law of S U S U^*, U Haar:
/// an atom of weight |kappa| at z = 1 and, for |kappa| < 1, the density
///   sqrt(1 - kappa^2 / sin^2(phi / 2))  on  |sin(phi / 2)| >= |kappa|
/// with respect to dphi / (2 pi), phi being the argument of z.
CircleMeasure stationary_measure(const RankParam& rank);

/// r_n(infinity) = kappa * int_0^kappa P_{n-1}^{(1,0)}(1 - 2 s^2) ds, exact.
Rational stationary_moment_jacobi(const RankParam& rank, int n);

/// r_n(infinity) = (1/2) sum_{k=1}^n (-1/2)_k/k! (2k)_{n-k}/(n-k)! (-4 kappa^2)^k, exact.
Rational stationary_moment_sum(const RankParam& rank, int n);

/// Taylor coefficients r_1..r_{n_max} of (H_infinity - 1)/2 extracted numerically
/// by the Cauchy integral on |z| = radius with `points` nodes.
std::vector<double> stationary_moments_taylor(const RankParam& rank, int n_max,
                                              double radius = 0.5, int points = 512);

/// (1/2)(1 - z) H_infinity(z); tends to |kappa| as z -> 1 from below.
double stationary_radial_weight(const RankParam& rank, double z);

}  // namespace freespec
