#include "freespec/matrix_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "freespec/roots.hpp"

#ifdef FREESPEC_OPENBLAS
extern "C" void openblas_set_num_threads(int);
#endif

namespace freespec {

namespace {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct TrialOutput {
  std::vector<std::vector<cd>> traces;  // [theta][n index]
  double defect = 0.0;
  int reortho = 0;
};

class Trial {
 public:
  Trial(int N, std::uint64_t seed) : n_(N), rng_(seed), refl_(N, N), tau_(N) {}

  // eigenvalues of an N x N GUE matrix with E|H_ij|^2 = 1/N (tridiagonal beta = 2 model)
  Eigen::VectorXd gue_eigenvalues() {
    Eigen::VectorXd diag(n_);
    Eigen::VectorXd sub(std::max(n_ - 1, 1));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
    for (int i = 0; i < n_; ++i) diag[i] = normal_(rng_) * scale;
    for (int i = 0; i + 1 < n_; ++i) {
      // chi with 2(N - 1 - i) degrees of freedom, over sqrt(2)
      std::gamma_distribution<double> g(static_cast<double>(n_ - 1 - i), 1.0);
      sub[i] = std::sqrt(g(rng_)) * scale;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(n_ - 1), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }

  // Householder reflectors of the QR factorization of a complex Ginibre matrix,
  // drawn column by column; the product Q is Haar up to a diagonal phase.
  void draw_reflectors() {
    for (int k = 0; k < n_; ++k) {
      const int len = n_ - k;
      Eigen::VectorXcd x(len);
      for (int i = 0; i < len; ++i) x[i] = cd(normal_(rng_), normal_(rng_));
      double beta = 0.0;
      Eigen::VectorXcd essential(std::max(len - 1, 0));
      cd tau;
      x.makeHouseholder(essential, tau, beta);
      refl_.col(k).tail(len - 1) = essential;
      tau_[k] = tau;
    }
  }

  int n_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  CMatrix refl_;
  Eigen::VectorXcd tau_;
};

double unitarity_defect(const CMatrix& u) {
  const CMatrix g = u.adjoint() * u;
  return (g - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

void reorthonormalize(CMatrix& u) {
  Eigen::HouseholderQR<CMatrix> qr(u);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < u.cols(); ++i) {
    const cd d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  u = q;
}

TrialOutput run_trial(const SimConfig& cfg, double c, long steps, std::span<const double> thetas,
                      std::span<const int> n_list, std::uint64_t seed) {
  const int N = cfg.N;
  Trial tr(N, seed);
  CMatrix u = CMatrix::Identity(N, N);
  TrialOutput out;
  for (long s = 0; s < steps; ++s) {
    // exp(i c H) = V diag(e^{i c lambda}) V^* with V Haar independent of the spectrum
    const Eigen::VectorXd lambda = tr.gue_eigenvalues();
    tr.draw_reflectors();
    Eigen::HouseholderSequence<CMatrix, Eigen::VectorXcd> q(tr.refl_, tr.tau_);
    q.setLength(N - 1);
    u.applyOnTheLeft(q.adjoint());
    for (int i = 0; i < N; ++i) u.row(i) *= std::polar(1.0, c * lambda[i]);
    u.applyOnTheLeft(q);
    if (cfg.check_every > 0 && ((s + 1) % cfg.check_every == 0 || s + 1 == steps)) {
      const double d = unitarity_defect(u);
      out.defect = std::max(out.defect, d);
      if (d > 1e-8) {
        reorthonormalize(u);
        ++out.reortho;
      }
    }
  }
  const int n_max = *std::max_element(n_list.begin(), n_list.end());
  for (double theta : thetas) {
    const int plus = static_cast<int>(std::floor(theta * N));
    Eigen::VectorXd sdiag = Eigen::VectorXd::Constant(N, -1.0);
    sdiag.head(plus).setOnes();
    // A = S U S U^*
    const CMatrix su = sdiag.asDiagonal() * u;
    const CMatrix sua = sdiag.asDiagonal() * u.adjoint();
    const CMatrix a = su * sua;
    std::vector<cd> tr_pow(static_cast<std::size_t>(n_max + 1));
    CMatrix p = a;
    tr_pow[1] = a.trace() / static_cast<double>(N);
    for (int k = 2; k <= n_max; ++k) {
      if (k == n_max) {
        tr_pow[k] = (p.transpose().cwiseProduct(a)).sum() / static_cast<double>(N);
      } else {
        p = p * a;
        tr_pow[k] = p.trace() / static_cast<double>(N);
      }
    }
    std::vector<cd> row;
    for (int n : n_list) row.push_back(n == 0 ? cd(1.0) : tr_pow[static_cast<std::size_t>(n)]);
    out.traces.push_back(std::move(row));
  }
  return out;
}

}  // namespace

double calibrated_step_scale(double dt) {
  if (!(dt > 0.0 && dt <= 0.5)) throw std::invalid_argument("calibrated_step_scale: dt in (0, 0.5]");
  const double target = std::exp(-0.5 * dt);
  const auto f = [target](double c) { return std::cyl_bessel_j(1.0, 2.0 * c) / c - target; };
  const auto df = [](double c) { return -2.0 * std::cyl_bessel_j(2.0, 2.0 * c) / c; };
  const double guess = std::sqrt(dt);
  return roots::bisect_newton(f, df, 0.5 * guess, 1.5 * guess, 1e-14, 8).x;
}

double jackknife_mean_error(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (double v : x) total += v;
  const double mean = total / static_cast<double>(n);
  double acc = 0.0;
  for (double v : x) {
    const double loo = (total - v) / static_cast<double>(n - 1);
    acc += (loo - mean) * (loo - mean);
  }
  return std::sqrt(acc * static_cast<double>(n - 1) / static_cast<double>(n));
}

int resolve_threads(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("FREESPEC_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(n, 1);
}

std::vector<SimResult> simulate_moments(const SimConfig& cfg, std::span<const double> thetas,
                                        std::span<const int> n_list) {
  if (cfg.N < 2) throw std::invalid_argument("simulate_moments: N must be >= 2");
  if (!(cfg.dt > 0.0 && cfg.dt <= 0.01)) throw std::invalid_argument("simulate_moments: dt in (0, 0.01]");
  if (cfg.t_end < 0.0) throw std::invalid_argument("simulate_moments: t_end must be >= 0");
  if (cfg.trials < 1) throw std::invalid_argument("simulate_moments: trials must be >= 1");
  if (thetas.empty() || n_list.empty()) throw std::invalid_argument("simulate_moments: empty input");
  for (double th : thetas) {
    if (!(th >= 0.0 && th <= 1.0)) throw std::invalid_argument("simulate_moments: theta in [0, 1]");
  }
  for (int n : n_list) {
    if (n < 0) throw std::invalid_argument("simulate_moments: moment orders must be >= 0");
  }

  const auto start = std::chrono::steady_clock::now();
  const long steps = static_cast<long>(std::llround(cfg.t_end / cfg.dt));
  const double h = steps > 0 ? cfg.t_end / static_cast<double>(steps) : cfg.dt;
  const double c = calibrated_step_scale(h);

  std::vector<TrialOutput> outputs(static_cast<std::size_t>(cfg.trials));
  std::atomic<int> next{0};
  const int workers = std::min(resolve_threads(cfg.threads), cfg.trials);
#ifdef FREESPEC_OPENBLAS
  // parallelism comes from the trial pool; keep BLAS calls single-threaded
  openblas_set_num_threads(1);
#endif
  auto work = [&] {
    for (int i = next++; i < cfg.trials; i = next++) {
      const std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(i)));
      outputs[static_cast<std::size_t>(i)] = run_trial(cfg, c, steps, thetas, n_list, seed);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double defect = 0.0;
  int reortho = 0;
  for (const auto& o : outputs) {
    defect = std::max(defect, o.defect);
    reortho += o.reortho;
  }
  if (reortho > 0) {
    std::cerr << "simulate_moments: warning: " << reortho
              << " re-orthonormalizations after unitarity drift above 1e-8\n";
  }

  std::vector<SimResult> results;
  for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
    SimResult res;
    res.theta = thetas[ti];
    res.N = cfg.N;
    res.trials = cfg.trials;
    res.max_unitarity_defect = defect;
    res.reorthonormalizations = reortho;
    res.seconds = seconds;
    for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
      std::vector<double> values;
      double imag = 0.0;
      for (const auto& o : outputs) {
        const cd v = o.traces[ti][ni];
        values.push_back(v.real());
        imag = std::max(imag, std::abs(v.imag()));
      }
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      res.estimates.push_back({n_list[ni], mean, jackknife_mean_error(values), imag});
    }
    results.push_back(std::move(res));
  }
  return results;
}

SimResult simulate_moments(const SimConfig& cfg, std::span<const int> n_list) {
  const double theta[] = {cfg.theta};
  return simulate_moments(cfg, theta, n_list).front();
}

}  // namespace freespec
