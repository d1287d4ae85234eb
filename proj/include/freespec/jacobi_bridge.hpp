#pragma once

#include <span>
#include <vector>

#include "freespec/rank.hpp"

namespace freespec {

/// Number of terms k of the binomial sum that are kept for the n-th moment:
/// min(n, ceil(7 sqrt(n)) + 16). The weights C(2n, n-k)/4^n behave like
/// e^{-k^2/n}/sqrt(pi n), so the dropped tail is below 1e-20.
int jacobi_truncation(int n);

/// w_k = C(2n, n - k)/4^n for k = 0..K. Exact integers up to n = 1000, log-gamma above.
std::vector<double> binomial_weights(int n, int K);

/// tau[(P Y_t P Y_t^*)^n] = C(2n,n)/2^{2n+1} + (2 theta - 1)/2 + 4^{-n} sum_{k=1}^n C(2n,n-k) r_k(t)
/// with r = (r_1(t), r_2(t), ...); needs at least jacobi_truncation(n) entries.
double jacobi_moment(const RankParam& rank, int n, std::span<const double> r);

/// Same sum in exact arithmetic with all n terms; r must hold r_1..r_n.
Rational jacobi_moment_exact(const RankParam& rank, int n, std::span<const Rational> r);

/// r_1(t)..r_K(t) for the bridge: integrated moment ODE with step <= 1e-4.
std::vector<double> bridge_moments(const RankParam& rank, double t, int K);

/// Convenience form that computes the moments itself.
double jacobi_moment(const RankParam& rank, double t, int n);

struct CosineKernel {
  double lhs = 0.0;  // 4^{-n} sum_{k=1}^n C(2n, n-k) (e^{ik phi} + e^{-ik phi})
  double rhs = 0.0;  // cos^{2n}(phi/2) - 4^{-n} C(2n, n)
};
CosineKernel cosine_kernel_identity(int n, double phi);

struct LimitMoment {
  std::vector<int> n;
  std::vector<double> value;   // jacobi_moment along n
  double atom = 0.0;           // mu_t({1}) = |kappa|
  double predicted_limit = 0;  // (2 theta - 1 + |kappa|)/2 = max(2 theta - 1, 0)
  double fit_constant = 0.0;   // smallest C with |value - limit| <= C/sqrt(n) on n >= 100
};

/// Moments along an increasing n_grid and the predicted limit.
LimitMoment limit_moment(const RankParam& rank, double t, std::span<const int> n_grid);

/// max(2 theta - 1, 0)/theta: the mass at 1 of the compressed-space law.
Rational corollary_weight(const RankParam& rank);

}  // namespace freespec
