#include "freespec/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace freespec {

const ExpPoly& MomentTable::s(int n) const {
  if (n < 1 || n > n_max()) {
    throw std::out_of_range("MomentTable: moment index " + std::to_string(n) + " outside [1, " +
                            std::to_string(n_max()) + "]");
  }
  return s_[static_cast<std::size_t>(n - 1)];
}

MomentTable solve_recursion(const RankParam& rank, int n_max) {
  if (n_max < 1) throw std::invalid_argument("solve_recursion: n_max must be >= 1");
  const Rational& eps = rank.eps();
  MomentTable table(rank);
  table.s_.reserve(static_cast<std::size_t>(n_max));
  table.s_.push_back(ExpPoly(1, Poly::constant(eps)) + ExpPoly::constant(Rational(1) - eps));

  for (int n = 2; n <= n_max; ++n) {
    // sum_{j=1}^{n-1} s_j s_{n-j}, folded over the symmetric pairs.
    ExpPoly conv;
    for (int j = 1; 2 * j < n; ++j) conv += table.s(j) * table.s(n - j);
    conv *= Rational(2);
    if (n % 2 == 0) conv += table.s(n / 2) * table.s(n / 2);

    ExpPoly rhs = conv * Rational(-n);
    rhs += ExpPoly(n, Poly::constant(eps * Rational(static_cast<long>(n) * n)));
    ExpPoly s = rhs.antiderivative();
    s += ExpPoly::constant(Rational(1) - s.at_zero());
    table.s_.push_back(std::move(s));
  }
  return table;
}

double r_moment(const MomentTable& table, int n, double t) {
  if (t < 0.0) throw std::invalid_argument("r_moment: t must be >= 0");
  return static_cast<double>(table.s(n).eval_scaled(t, n));
}

std::vector<double> r_moments(const MomentTable& table, double t) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(table.n_max()));
  for (int n = 1; n <= table.n_max(); ++n) out.push_back(r_moment(table, n, t));
  return out;
}

namespace {

// Nonlinear part of the moment ODE: -n sum_{j<n} r_j r_{n-j} + eps n^2.
void moment_rhs(std::span<const double> r, double eps, std::span<double> out) {
  const std::size_t K = r.size();
  for (std::size_t i = 0; i < K; ++i) {
    const std::size_t n = i + 1;
    double conv = 0.0;
    for (std::size_t j = 1; 2 * j < n; ++j) conv += r[j - 1] * r[n - j - 1];
    conv *= 2.0;
    if (n % 2 == 0) conv += r[n / 2 - 1] * r[n / 2 - 1];
    const double nd = static_cast<double>(n);
    out[i] = -nd * conv + eps * nd * nd;
  }
}

}  // namespace

// Lawson (integrating factor) RK4 on r' = -diag(n) r + N(r): the linear decay is
// propagated exactly, so the step is limited by the smoothness of N only.
std::vector<double> integrate_moments(const RankParam& rank, double t, int n_max, double step) {
  if (n_max < 1) throw std::invalid_argument("integrate_moments: n_max must be >= 1");
  if (t < 0.0) throw std::invalid_argument("integrate_moments: t must be >= 0");
  const auto K = static_cast<std::size_t>(n_max);
  std::vector<double> r(K, 1.0);
  if (t == 0.0) return r;
  if (step <= 0.0) step = std::min(1e-3, 0.002 / n_max);
  const auto steps = static_cast<long>(std::ceil(t / step));
  const double h = t / static_cast<double>(steps);
  const double eps = rank.eps_d();

  std::vector<double> half(K), full(K);
  for (std::size_t i = 0; i < K; ++i) {
    half[i] = std::exp(-static_cast<double>(i + 1) * h * 0.5);
    full[i] = half[i] * half[i];
  }
  std::vector<double> k1(K), k2(K), k3(K), k4(K), tmp(K);
  for (long s = 0; s < steps; ++s) {
    moment_rhs(r, eps, k1);
    for (std::size_t i = 0; i < K; ++i) tmp[i] = half[i] * (r[i] + 0.5 * h * k1[i]);
    moment_rhs(tmp, eps, k2);
    for (std::size_t i = 0; i < K; ++i) tmp[i] = half[i] * r[i] + 0.5 * h * k2[i];
    moment_rhs(tmp, eps, k3);
    for (std::size_t i = 0; i < K; ++i) tmp[i] = full[i] * r[i] + h * half[i] * k3[i];
    moment_rhs(tmp, eps, k4);
    for (std::size_t i = 0; i < K; ++i) {
      r[i] = full[i] * r[i] +
             h / 6.0 * (full[i] * k1[i] + 2.0 * half[i] * (k2[i] + k3[i]) + k4[i]);
    }
  }
  return r;
}

std::complex<double> herglotz_series(std::span<const double> r, std::complex<double> z, int N) {
  if (std::abs(z) >= 1.0) throw std::domain_error("herglotz_series: requires |z| < 1");
  if (N < 0 || static_cast<std::size_t>(N) > r.size()) {
    throw std::out_of_range("herglotz_series: truncation order exceeds available moments");
  }
  // Horner in z on sum_{n=1}^N r_n z^n.
  std::complex<double> acc = 0.0;
  for (int n = N; n >= 1; --n) acc = (acc + r[static_cast<std::size_t>(n - 1)]) * z;
  return 1.0 + 2.0 * acc;
}

std::complex<double> herglotz_series(const MomentTable& table, double t, std::complex<double> z,
                                     int N) {
  if (std::abs(z) >= 1.0) throw std::domain_error("herglotz_series: requires |z| < 1");
  if (N > table.n_max()) {
    throw std::out_of_range("herglotz_series: N exceeds the table order");
  }
  const auto r = r_moments(table, t);
  return herglotz_series(r, z, N);
}

std::vector<PdeCheck> check_pde_coefficients(const MomentTable& table) {
  const int n_max = table.n_max();
  const Rational& eps = table.rank().eps();
  std::vector<ExpPoly> r;
  r.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) r.push_back(table.r(n));

  std::vector<PdeCheck> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto idx = [](int k) { return static_cast<std::size_t>(k - 1); };
    ExpPoly conv;
    for (int j = 1; j < n; ++j) conv += r[idx(j)] * r[idx(n - j)];
    ExpPoly rhs = r[idx(n)] * Rational(-n) + conv * Rational(-n) +
                  ExpPoly::constant(eps * Rational(static_cast<long>(n) * n));
    out.push_back({n, r[idx(n)].derivative() == rhs});
  }
  return out;
}

}  // namespace freespec
