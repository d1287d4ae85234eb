#include "freespec/jacobi_bridge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "freespec/flow.hpp"
#include "freespec/moments.hpp"

namespace freespec {

int jacobi_truncation(int n) {
  if (n < 1) throw std::invalid_argument("jacobi_truncation: n must be >= 1");
  return std::min(n, static_cast<int>(std::ceil(7.0 * std::sqrt(static_cast<double>(n)))) + 16);
}

std::vector<double> binomial_weights(int n, int K) {
  if (n < 0 || K < 0 || K > n) throw std::invalid_argument("binomial_weights: need 0 <= K <= n");
  std::vector<double> w(static_cast<std::size_t>(K + 1));
  if (n <= 1000) {
    const Rational scale = pow(Rational(4), static_cast<unsigned>(n));
    for (int k = 0; k <= K; ++k) {
      w[static_cast<std::size_t>(k)] = (binomial(2L * n, n - k) / scale).to_double();
    }
    return w;
  }
  const double log_norm = std::lgamma(2.0 * n + 1.0) - 2.0 * n * std::numbers::ln2;
  for (int k = 0; k <= K; ++k) {
    w[static_cast<std::size_t>(k)] =
        std::exp(log_norm - std::lgamma(n - k + 1.0) - std::lgamma(n + k + 1.0));
  }
  return w;
}

double jacobi_moment(const RankParam& rank, int n, std::span<const double> r) {
  const int K = jacobi_truncation(n);
  if (r.size() < static_cast<std::size_t>(K)) {
    throw std::out_of_range("jacobi_moment: not enough moments r_k for this n");
  }
  const auto w = binomial_weights(n, K);
  // add the small terms first
  double sum = 0.0;
  for (int k = K; k >= 1; --k) sum += w[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k - 1)];
  return 0.5 * w[0] + 0.5 * rank.kappa_d() + sum;
}

Rational jacobi_moment_exact(const RankParam& rank, int n, std::span<const Rational> r) {
  if (n < 1) throw std::invalid_argument("jacobi_moment_exact: n must be >= 1");
  if (r.size() < static_cast<std::size_t>(n)) {
    throw std::out_of_range("jacobi_moment_exact: need r_1..r_n");
  }
  Rational sum(0);
  for (int k = 1; k <= n; ++k) sum += binomial(2L * n, n - k) * r[static_cast<std::size_t>(k - 1)];
  const Rational scale = pow(Rational(4), static_cast<unsigned>(n));
  return binomial(2L * n, n) / (Rational(2) * scale) + rank.kappa() / Rational(2) + sum / scale;
}

std::vector<double> bridge_moments(const RankParam& rank, double t, int K) {
  // step 1e-4 keeps r_k within ~1e-10 for K ~ 500 (checked against the Laguerre
  // closed form at eps = 0)
  return integrate_moments(rank, t, K, 1e-4);
}

double jacobi_moment(const RankParam& rank, double t, int n) {
  const auto r = bridge_moments(rank, t, jacobi_truncation(n));
  return jacobi_moment(rank, n, r);
}

CosineKernel cosine_kernel_identity(int n, double phi) {
  if (n < 1) throw std::invalid_argument("cosine_kernel_identity: n must be >= 1");
  const auto w = binomial_weights(n, n);
  double lhs = 0.0;
  for (int k = n; k >= 1; --k) lhs += w[static_cast<std::size_t>(k)] * 2.0 * std::cos(k * phi);
  const double c = std::cos(0.5 * phi);
  return {lhs, std::pow(c * c, n) - w[0]};
}

LimitMoment limit_moment(const RankParam& rank, double t, std::span<const int> n_grid) {
  if (n_grid.empty()) throw std::invalid_argument("limit_moment: empty grid");
  if (!std::is_sorted(n_grid.begin(), n_grid.end()) || n_grid.front() < 1) {
    throw std::invalid_argument("limit_moment: n_grid must be increasing and positive");
  }
  LimitMoment out;
  out.atom = t > 0.0 ? atom_weight_mu_t(rank, t) : 1.0;
  out.predicted_limit = 0.5 * (rank.kappa_d() + out.atom);
  const auto r = bridge_moments(rank, t, jacobi_truncation(n_grid.back()));
  for (int n : n_grid) {
    const double v = jacobi_moment(rank, n, r);
    out.n.push_back(n);
    out.value.push_back(v);
    if (n >= 100) {
      out.fit_constant = std::max(out.fit_constant, std::abs(v - out.predicted_limit) * std::sqrt(n));
    }
  }
  return out;
}

Rational corollary_weight(const RankParam& rank) {
  const Rational excess = Rational(2) * rank.theta() - Rational(1);
  return excess.sign() > 0 ? excess / rank.theta() : Rational(0);
}

}  // namespace freespec
