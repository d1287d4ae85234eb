#include "freespec/stationary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "freespec/orthopoly.hpp"
#include "freespec/quadrature.hpp"

namespace freespec {

using std::numbers::pi;

double CircleMeasure::atom_mass() const {
  double m = 0.0;
  for (const auto& a : atoms) m += a.weight.to_double();
  return m;
}

double CircleMeasure::integrate_density(const std::function<double(double)>& g,
                                        double tol) const {
  if (!density) return 0.0;
  double acc = 0.0;
  for (const auto& arc : support) {
    acc += quad::integrate_sqrt_endpoints([&](double phi) { return g(phi) * density(phi); },
                                          arc.begin, arc.end, tol);
  }
  return acc / (2.0 * pi);
}

double CircleMeasure::total_mass() const {
  return atom_mass() + integrate_density([](double) { return 1.0; });
}

double CircleMeasure::moment(int n) const {
  double m = 0.0;
  for (const auto& a : atoms) m += a.weight.to_double() * std::cos(n * a.angle);
  return m + integrate_density([n](double phi) { return std::cos(n * phi); });
}

std::complex<double> herglotz_stationary(const RankParam& rank, std::complex<double> z) {
  if (std::abs(z) >= 1.0) throw std::domain_error("herglotz_stationary: requires |z| < 1");
  const double eps = rank.eps_d();
  const std::complex<double> one_minus = 1.0 - z;
  return std::sqrt(1.0 + 4.0 * eps * z / (one_minus * one_minus));
}

CircleMeasure stationary_measure(const RankParam& rank) {
  CircleMeasure mu;
  const Rational weight = rank.abs_kappa();
  if (!weight.is_zero()) mu.atoms.push_back({0.0, weight});
  if (weight == Rational(1)) return mu;

  const double k = rank.abs_kappa_d();
  const double eps = k * k;
  if (k == 0.0) {
    mu.density = [](double) { return 1.0; };
  } else {
    mu.density = [eps](double phi) {
      const double s = std::sin(0.5 * phi);
      const double s2 = s * s;
      return s2 <= eps ? 0.0 : std::sqrt(1.0 - eps / s2);
    };
  }
  // |sin(phi/2)| >= |kappa|  <=>  phi in [2 asin|kappa|, 2 pi - 2 asin|kappa|]; split at
  // phi = pi so that each piece has at most one square-root edge.
  const double edge = 2.0 * std::asin(k);
  mu.support = {{edge, pi}, {pi, 2.0 * pi - edge}};
  return mu;
}

Rational stationary_moment_jacobi(const RankParam& rank, int n) {
  if (n < 1) throw std::invalid_argument("stationary_moment_jacobi: n must be >= 1");
  const Poly inner({Rational(1), Rational(0), Rational(-2)});  // 1 - 2 s^2
  const Poly integrand = jacobi_p10(static_cast<unsigned>(n - 1)).compose(inner);
  const Poly primitive = integrand.antiderivative();  // vanishes at 0
  return rank.kappa() * primitive(rank.kappa());
}

Rational stationary_moment_sum(const RankParam& rank, int n) {
  if (n < 1) throw std::invalid_argument("stationary_moment_sum: n must be >= 1");
  const Rational base = Rational(-4) * rank.eps();
  Rational acc(0);
  for (int k = 1; k <= n; ++k) {
    const auto ku = static_cast<unsigned>(k);
    const auto rest = static_cast<unsigned>(n - k);
    acc += pochhammer(Rational(-1, 2), ku) / factorial(ku) * pochhammer(Rational(2 * k), rest) /
           factorial(rest) * pow(base, ku);
  }
  return acc * Rational(1, 2);
}

std::vector<double> stationary_moments_taylor(const RankParam& rank, int n_max, double radius,
                                              int points) {
  if (n_max < 1) throw std::invalid_argument("stationary_moments_taylor: n_max must be >= 1");
  std::vector<std::complex<double>> values(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    const double a = 2.0 * pi * j / points;
    values[static_cast<std::size_t>(j)] = herglotz_stationary(rank, std::polar(radius, a));
  }
  std::vector<double> r;
  r.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < points; ++j) {
      acc += values[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * pi * n * j / points);
    }
    const std::complex<double> coeff = acc / static_cast<double>(points) / std::pow(radius, n);
    r.push_back(0.5 * coeff.real());
  }
  return r;
}

double stationary_radial_weight(const RankParam& rank, double z) {
  if (!(z >= 0.0 && z < 1.0)) throw std::domain_error("stationary_radial_weight: z in [0, 1)");
  // (1 - z) H_inf(z) = sqrt((1 - z)^2 + 4 kappa^2 z) for real z.
  const double w = 1.0 - z;
  return 0.5 * std::sqrt(w * w + 4.0 * rank.eps_d() * z);
}

}  // namespace freespec
