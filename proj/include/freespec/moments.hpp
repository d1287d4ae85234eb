#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "freespec/exppoly.hpp"
#include "freespec/rank.hpp"

namespace freespec {

inline constexpr int kDefaultMomentOrder = 12;

/// Exact moments s_n(t) = e^{nt} r_n(t), n = 1..n_max, of S Y_t S Y_t^*.
class MomentTable {
 public:
  const RankParam& rank() const { return rank_; }
  int n_max() const { return static_cast<int>(s_.size()); }
  /// s_n for 1 <= n <= n_max.
  const ExpPoly& s(int n) const;
  /// r_n = e^{-nt} s_n as an element of the same ring (negative frequencies).
  ExpPoly r(int n) const { return s(n).shifted(-n); }

 private:
  friend MomentTable solve_recursion(const RankParam& rank, int n_max);
  explicit MomentTable(RankParam rank) : rank_(std::move(rank)) {}
  RankParam rank_;
  std::vector<ExpPoly> s_;
};

/// Solves  s_1 = eps e^t + (1 - eps),
///         s_n' = -n sum_{j=1}^{n-1} s_j s_{n-j} + eps n^2 e^{nt},  s_n(0) = 1,
/// exactly in the ring of exponential polynomials.
MomentTable solve_recursion(const RankParam& rank, int n_max = kDefaultMomentOrder);

/// r_n(t) = e^{-nt} s_n(t).
double r_moment(const MomentTable& table, int n, double t);
/// r_1(t), ..., r_{n_max}(t).
std::vector<double> r_moments(const MomentTable& table, double t);

/// Numerical r_1(t), ..., r_{n_max}(t) from the same moment ODE system, integrated
/// in double precision with an integrating-factor RK4 scheme. Used where the exact
/// table would be too large (truncation orders in the tens or hundreds).
/// `step` <= 0 picks min(1e-3, 0.002 / n_max), which keeps the global error
/// near 1e-11; coarser steps trade accuracy as (n_max * step)^4.
std::vector<double> integrate_moments(const RankParam& rank, double t, int n_max, double step = 0.0);

/// Partial Herglotz sum 1 + 2 sum_{n<=N} r_n z^n for |z| < 1 with r = (r_1, r_2, ...).
std::complex<double> herglotz_series(std::span<const double> r, std::complex<double> z, int N);
std::complex<double> herglotz_series(const MomentTable& table, double t, std::complex<double> z,
                                     int N);

struct PdeCheck {
  int n = 0;
  bool passed = false;
};

/// Exact check, per power z^n, of
///   r_n' = -n r_n - n sum_{j<n} r_j r_{n-j} + kappa^2 n^2,
/// the coefficientwise form of  H_t + (z/2)(H^2)_z = 2 kappa^2 z(1+z)/(1-z)^3.
std::vector<PdeCheck> check_pde_coefficients(const MomentTable& table);

}  // namespace freespec
