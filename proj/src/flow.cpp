#include "freespec/flow.hpp"

#include <cmath>

#include "freespec/moments.hpp"
#include "freespec/roots.hpp"

namespace freespec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool degenerate(const FlowParams& p) { return p.eps == 1.0; }

}  // namespace

FlowParams FlowParams::make(const RankParam& rank, double y) {
  if (!(y > 0.0)) throw std::invalid_argument("FlowParams: y must be positive");
  FlowParams p;
  p.y = y;
  p.eps = rank.eps_d();
  const double one_minus = 1.0 - p.eps;
  p.a = p.eps + one_minus * y * y;
  p.b = p.a + p.eps;
  const double sa = std::sqrt(p.a);
  p.lambda = one_minus * one_minus * y * y * (1.0 - y) * (1.0 + y) / ((1.0 + sa) * (1.0 + sa));
  return p;
}

double blowup_time(const FlowParams& p) {
  if (p.y <= 1.0) return kInf;
  if (degenerate(p)) {
    const double y2 = p.y * p.y;
    return std::log(y2 / (y2 - 1.0));
  }
  // (b + lambda e^{sqrt(a) t})^2 = 4 eps a with lambda < 0 happens first at
  // |lambda| e^{sqrt(a) t} = (sqrt(a) - |kappa|)^2.
  const double sa = std::sqrt(p.a);
  const double k = std::sqrt(p.eps);
  return (2.0 * std::log(sa - k) - std::log(-p.lambda)) / sa;
}

double phi_squared(const FlowParams& p, double t) {
  if (t < 0.0) throw std::domain_error("phi_squared: t must be non-negative");
  if (p.y == 1.0) return 1.0;
  const double t_star = blowup_time(p);
  if (t >= t_star) {
    throw BlowupError("phi_squared: t = " + std::to_string(t) + " is past blow-up time " +
                          std::to_string(t_star),
                      t_star);
  }
  if (degenerate(p)) {
    const double y2 = p.y * p.y;
    return y2 / (y2 - (y2 - 1.0) * std::exp(t));
  }
  const double sa = std::sqrt(p.a);
  if (p.y > 1.0) {
    // (b + E)^2 - 4 eps a = ((sqrt(a) - k)^2 + E)((sqrt(a) + k)^2 + E), and the first
    // factor is (sqrt(a) - k)^2 (1 - e^{sqrt(a)(t - T*)}); this keeps phi accurate
    // right up to the pole.
    const double k = std::sqrt(p.eps);
    const double e = p.lambda * std::exp(sa * t);
    const double near = (sa - k) * (sa - k) * -std::expm1(sa * (t - t_star));
    const double far = (sa + k) * (sa + k) + e;
    return 1.0 - 4.0 * p.a * e / (near * far);
  }
  // 0 < y < 1: E grows without bound; divide through by E^2 once it is large.
  const double log_e = std::log(p.lambda) + sa * t;
  if (log_e < 0.0) {
    const double e = std::exp(log_e);
    const double s = p.b + e;
    return 1.0 - 4.0 * p.a * e / (s * s - 4.0 * p.eps * p.a);
  }
  const double inv = std::exp(-log_e);
  const double s = p.b * inv + 1.0;
  return 1.0 - 4.0 * p.a * inv / (s * s - 4.0 * p.eps * p.a * inv * inv);
}

double phi(const FlowParams& p, double t) {
  const double sq = std::max(phi_squared(p, t), 0.0);
  const double mag = std::sqrt(sq);
  if (p.y >= 1.0) return mag;
  if (degenerate(p)) {
    // phi' = (1/2)(phi^2 - 1)|phi| keeps the sign of y
    return mag;
  }
  // phi vanishes when lambda e^{sqrt(a) t} = (1 - eps) y^2.
  const double log_e = std::log(p.lambda) + std::sqrt(p.a) * t;
  return log_e <= std::log((1.0 - p.eps) * p.y * p.y) ? mag : -mag;
}

double flow_rhs(const FlowParams& p, double phi_value) {
  return 0.5 * (phi_value * phi_value - 1.0) *
         std::sqrt((1.0 - p.eps) * p.y * p.y + p.eps * phi_value * phi_value);
}

double z_to_y(double z) {
  if (!(z > -1.0 && z < 1.0)) throw std::domain_error("z must lie in (-1, 1)");
  return (1.0 + z) / (1.0 - z);
}

double y_to_z(double y) { return (y - 1.0) / (y + 1.0); }

double psi(const RankParam& rank, double t, double z) {
  if (t == 0.0) {
    if (!(z > -1.0 && z < 1.0)) throw std::domain_error("z must lie in (-1, 1)");
    return z;
  }
  const double f = phi(FlowParams::make(rank, z_to_y(z)), t);
  return (f - 1.0) / (f + 1.0);
}

double conserved_identity_residual(const RankParam& rank, std::span<const double> r, double t,
                                   double z, int N) {
  const double y = z_to_y(z);
  const double ps = psi(rank, t, z);
  if (!(std::abs(ps) < 1.0)) {
    throw std::domain_error("conserved_identity_residual: |psi(t, z)| >= 1");
  }
  const double h = herglotz_series(r, {ps, 0.0}, N).real();
  const double eps = rank.eps_d();
  const double q = (1.0 + ps) / (1.0 - ps);
  return std::abs(h * h - eps * q * q - (1.0 - eps) * y * y);
}

double conserved_identity_residual(const RankParam& rank, double t, double z, int N) {
  const auto r = integrate_moments(rank, t, N);
  return conserved_identity_residual(rank, r, t, z, N);
}

BlowupPoint blowup_point(const RankParam& rank, double t) {
  if (!(t > 0.0)) throw std::domain_error("blowup_point: t must be positive");
  if (rank.abs_kappa() == Rational(1)) {
    throw std::domain_error("blowup_point: |kappa| = 1 is degenerate (mu_t is a point mass)");
  }
  BlowupPoint out;
  out.t = t;
  const double k = rank.abs_kappa_d();
  const double eps = rank.eps_d();

  if (k == 0.0) {
    // log form: ln z + t (1 + z)/(1 - z) = 0, increasing from -inf to +inf on (0, 1)
    const auto g = [t](double z) { return std::log(z) + t * (1.0 + z) / (1.0 - z); };
    const auto dg = [t](double z) { return 1.0 / z + 2.0 * t / ((1.0 - z) * (1.0 - z)); };
    double lo = 0.5, hi = 0.5;
    while (g(lo) > 0.0) lo *= 0.5;
    while (g(hi) < 0.0) hi = 0.5 * (hi + 1.0);
    const auto root = roots::bisect_newton(g, dg, lo, hi, 1e-12, 8);
    out.z = root.x;
    out.y = z_to_y(out.z);
    out.a = out.y * out.y;
    const double lhs = out.z * std::exp(t * out.y);
    out.residual = std::abs(lhs - 1.0);
    return out;
  }

  // s = sqrt(a); g is increasing on (1, inf) from -inf to +inf
  const auto g = [t, k](double s) {
    return s * t + std::log(s + k) - std::log(s - k) + std::log(s - 1.0) - std::log(s + 1.0);
  };
  const auto dg = [t, k](double s) {
    return t + 1.0 / (s + k) - 1.0 / (s - k) + 1.0 / (s - 1.0) - 1.0 / (s + 1.0);
  };
  const double lo = 1.0 + 1e-12;
  double hi = 2.0;
  while (g(hi) < 0.0) hi = 1.0 + 2.0 * (hi - 1.0);
  const auto root = roots::bisect_newton(g, dg, lo, hi, 1e-12, 8);
  const double s = root.x;
  out.a = s * s;
  out.y = std::sqrt((out.a - eps) / (1.0 - eps));
  out.z = y_to_z(out.y);
  const double lhs = std::exp(s * t) * (k + s);
  const double rhs = (s + 1.0) / (s - 1.0) * (s - k);
  out.residual = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
  return out;
}

double atom_weight_mu_t(const RankParam& rank, double t) {
  if (!(t > 0.0)) throw std::domain_error("atom_weight_mu_t: t must be positive");
  return rank.abs_kappa_d();
}

double atom_limit_quantity(const RankParam& rank, double t, double z) {
  const double y = z_to_y(z);
  const double ps = psi(rank, t, z);
  const double eps = rank.eps_d();
  const double w = 1.0 - ps;
  return eps * (1.0 + ps) * (1.0 + ps) + (1.0 - eps) * y * y * w * w;
}

std::vector<AtomLimitSample> atom_limit_path(const RankParam& rank, double t, int digits) {
  if (digits < 1 || digits > 15) throw std::invalid_argument("atom_limit_path: digits in [1, 15]");
  const double zt = blowup_point(rank, t).z;
  std::vector<AtomLimitSample> path;
  double gap = 0.1;
  for (int d = 1; d <= digits; ++d, gap *= 0.1) {
    const double z = zt - gap;
    if (z <= -1.0) continue;
    path.push_back({gap, psi(rank, t, z), atom_limit_quantity(rank, t, z)});
  }
  return path;
}

bool flow_monotonicity_check(const RankParam& rank, std::span<const double> t_grid, double y1,
                             double y2) {
  if (!(1.0 < y1 && y1 < y2)) {
    throw std::invalid_argument("flow_monotonicity_check: requires 1 < y1 < y2");
  }
  const auto p1 = FlowParams::make(rank, y1);
  const auto p2 = FlowParams::make(rank, y2);
  const double t1 = blowup_time(p1);
  const double t2 = blowup_time(p2);
  if (!(t2 < t1)) return false;
  for (const double t : t_grid) {
    if (t < 0.0 || t >= t2) continue;
    const double f1 = phi(p1, t);
    const double f2 = phi(p2, t);
    if (!(1.0 < f1 && f1 < f2)) return false;
  }
  return true;
}

}  // namespace freespec
