#include "freespec/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "freespec/ncfree.hpp"

namespace freespec {

namespace {

bool near_cut(cplx w) { return w.real() < 0.0 && std::abs(w.imag()) <= kBranchCutGuard; }

// (sqrt(1 + 4y(y + s)) - 1)/(2y) for the signed mean s.
BranchValue r_bernoulli(double s, cplx y) {
  if (std::abs(y) < 1e-6) {
    // cumulants of a +-1 variable with mean s: c1 = s, c2 = 1 - s^2, c3 = -2s(1 - s^2),
    // c4 = -(1 - s^2)(1 - 5s^2)
    const double v = 1.0 - s * s;
    const cplx value = s + y * (v + y * (-2.0 * s * v + y * (-v * (1.0 - 5.0 * s * s))));
    return {value, false};
  }
  const cplx w = 1.0 + 4.0 * y * (y + s);
  // rationalized form of (sqrt(w) - 1)/(2y)
  return {2.0 * (y + s) / (std::sqrt(w) + 1.0), near_cut(w)};
}

}  // namespace

BranchValue r_transform_a1(const RankParam& rank, cplx y) {
  return r_bernoulli(rank.kappa_d(), y);
}

BranchValue r_transform_minus_a2(const RankParam& rank, cplx y) {
  return r_bernoulli(-rank.kappa_d(), y);
}

BranchValue r_transform_half(const RankParam& rank, cplx y) {
  const auto a = r_transform_a1(rank, y);
  const auto b = r_transform_minus_a2(rank, y);
  return {0.5 * (a.value + b.value), a.near_branch_cut || b.near_branch_cut};
}

cplx k_transform(const RankParam& rank, cplx y) {
  if (y == 0.0) throw std::domain_error("k_transform: y = 0");
  return r_transform_half(rank, y).value + 1.0 / y;
}

std::vector<Rational> half_convolution_cumulants(const RankParam& rank, int n_max) {
  if (n_max < 1 || n_max > 12) throw std::out_of_range("half_convolution: n_max in [1, 12]");
  const auto c = cumulants_of_S(rank, n_max);
  std::vector<Rational> h(static_cast<std::size_t>(n_max + 1), Rational(0));
  for (std::size_t k = 2; k < h.size(); k += 2) h[k] = c[k];  // (c_k + (-1)^k c_k)/2
  return h;
}

std::vector<Rational> half_convolution_moments(const RankParam& rank, int n_max) {
  return moments_from_cumulants(CumulantSeq{half_convolution_cumulants(rank, n_max)});
}

Cubic cubic_at(const RankParam& rank, cplx z) {
  if (z == 0.0 || z == 1.0 || z == -1.0) throw std::domain_error("cubic_at: z in {0, 1, -1}");
  const double eps = rank.eps_d();
  const cplx z2 = z * z;
  const cplx d = z2 - 1.0;
  return {(2.0 * z2 - 1.0) / (z * d), (5.0 * z2 + eps - 1.0) / (4.0 * z2 * d),
          1.0 / (4.0 * z * d)};
}

namespace {

cplx polish(const Cubic& c, cplx r) {
  for (int i = 0; i < 3; ++i) {
    const cplx f = c(r);
    const cplx df = c.derivative(r);
    if (df == 0.0) break;
    const cplx next = r - f / df;
    if (!(std::abs(c(next)) < std::abs(f))) break;
    r = next;
  }
  return r;
}

}  // namespace

std::array<cplx, 3> solve_cubic(const Cubic& c) {
  // y = x + h1/3: x^3 + p x + q = 0
  const cplx s = c.h1 / 3.0;
  const cplx p = c.h2 - c.h1 * s;
  const cplx q = -2.0 * s * s * s + c.h2 * s - c.h3;
  const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  cplx w = -q / 2.0 + disc;
  const cplx w_alt = -q / 2.0 - disc;
  if (std::abs(w_alt) > std::abs(w)) w = w_alt;
  std::array<cplx, 3> roots;
  if (std::abs(w) == 0.0) {
    roots.fill(s);  // triple root
    return roots;
  }
  const cplx u = std::pow(w, 1.0 / 3.0);
  const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  cplx uk = u;
  for (auto& r : roots) {
    r = uk - p / (3.0 * uk) + s;
    uk *= omega;
  }
  // Keep the best separated root, then split off the remaining quadratic
  // y^2 - (h1 - r0) y + h3/r0; near-double roots stay consistent with Vieta.
  std::size_t pick = 0;
  double sep = -1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double d = std::min(std::abs(roots[i] - roots[(i + 1) % 3]), std::abs(roots[i] - roots[(i + 2) % 3]));
    if (d > sep) {
      sep = d;
      pick = i;
    }
  }
  cplx r0 = polish(c, roots[pick]);
  if (r0 == 0.0) return roots;
  const cplx b = -(c.h1 - r0);
  const cplx k = c.h3 / r0;
  const cplx root = std::sqrt(b * b - 4.0 * k);
  cplx big = -0.5 * (b + root);
  const cplx big_alt = -0.5 * (b - root);
  if (std::abs(big_alt) > std::abs(big)) big = big_alt;
  roots[0] = r0;
  if (big == 0.0) {
    roots[1] = roots[2] = 0.0;
  } else {
    // no separate polishing: Newton on a near-double root breaks the pairing
    roots[1] = big;
    roots[2] = k / big;
  }
  return roots;
}

std::array<double, 3> vieta_residuals(const Cubic& c, const std::array<cplx, 3>& r) {
  const auto rel = [](cplx got, cplx want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
  };
  return {rel(r[0] + r[1] + r[2], c.h1), rel(r[0] * r[1] + r[0] * r[2] + r[1] * r[2], c.h2),
          rel(r[0] * r[1] * r[2], c.h3)};
}

double reduced_form_residual(const Cubic& c, cplx y) {
  const cplx root = std::sqrt(3.0 * c.h2 - c.h1 * c.h1);
  const cplx u = (3.0 * y - c.h1) / root;
  const cplx q = (2.0 * c.h1 * c.h1 * c.h1 - 9.0 * c.h1 * c.h2 + 27.0 * c.h3) / (root * root * root);
  return std::abs(u * u * u + 3.0 * u - q);
}

cplx track_root(const RankParam& rank, cplx z_from, cplx y_from, cplx z_to) {
  cplx y = y_from;
  double s = 0.0;
  double h = 1.0 / 64.0;
  while (s < 1.0) {
    const double step = std::min(h, 1.0 - s);
    const cplx z = z_from + (s + step) * (z_to - z_from);
    const auto roots = solve_cubic(cubic_at(rank, z));
    std::array<double, 3> dist;
    for (int i = 0; i < 3; ++i) dist[i] = std::abs(roots[i] - y);
    const auto best = std::min_element(dist.begin(), dist.end()) - dist.begin();
    double second = INFINITY;
    for (int i = 0; i < 3; ++i) {
      if (i != best) second = std::min(second, dist[i]);
    }
    // accept only unambiguous, small moves
    if (dist[best] < 0.25 * second && dist[best] <= 0.1 * std::abs(y) + 1e-14) {
      y = roots[best];
      s += step;
      h = std::min(2.0 * h, 0.25);
    } else {
      h *= 0.5;
      if (h < 1e-12) throw RootTrackingError("track_root: roots too close to continue");
    }
  }
  return y;
}

namespace {

constexpr double kStart = 1e3;

cplx start_root(const RankParam& rank, double z0) {
  const auto roots = solve_cubic(cubic_at(rank, z0));
  cplx best = roots[0];
  for (const auto& r : roots) {
    if (std::abs(r - 1.0 / z0) < std::abs(best - 1.0 / z0)) best = r;
  }
  return best;
}

}  // namespace

cplx cauchy_via_cubic(const RankParam& rank, cplx z) {
  if (z.imag() < 0.0) return std::conj(cauchy_via_cubic(rank, std::conj(z)));
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (std::abs(x) < 2.5) throw std::domain_error("cauchy_via_cubic: real z must have |z| >= 2.5");
    if (x < 0.0) return -cauchy_via_cubic(rank, -z);  // even moments only
    const double x0 = std::max(kStart, x);
    return track_root(rank, x0, start_root(rank, x0), z);
  }
  const double x0 = std::max(kStart, std::abs(z.real()));
  const cplx corner(x0, z.imag());
  cplx y = track_root(rank, x0, start_root(rank, x0), corner);
  return track_root(rank, corner, y, z);
}

std::vector<cplx> laurent_moments(const RankParam& rank, int n_max, double radius, int nodes) {
  if (n_max < 0 || nodes < 2 * (n_max + 2)) throw std::invalid_argument("laurent_moments: bad sizes");
  if (radius < 2.5) throw std::invalid_argument("laurent_moments: radius must be >= 2.5");
  std::vector<cplx> g(static_cast<std::size_t>(nodes));
  cplx z_prev = radius;
  cplx y = cauchy_via_cubic(rank, radius);
  g[0] = y;
  for (int j = 1; j < nodes; ++j) {
    const cplx z = std::polar(radius, 2.0 * std::numbers::pi * j / nodes);
    y = track_root(rank, z_prev, y, z);
    g[static_cast<std::size_t>(j)] = y;
    z_prev = z;
  }
  // the continuation must close up on the same branch
  const cplx back = track_root(rank, z_prev, y, radius);
  if (std::abs(back - g[0]) > 1e-10 * std::abs(g[0])) {
    throw RootTrackingError("laurent_moments: branch did not close around the circle");
  }
  std::vector<cplx> m(static_cast<std::size_t>(n_max + 1));
  for (int k = 0; k <= n_max; ++k) {
    cplx acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
      acc += g[static_cast<std::size_t>(j)] * std::polar(1.0, 2.0 * std::numbers::pi * j * (k + 1) / nodes);
    }
    m[static_cast<std::size_t>(k)] = acc / static_cast<double>(nodes) * std::pow(radius, k + 1);
  }
  return m;
}

}  // namespace freespec
