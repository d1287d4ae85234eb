#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace freespec {

/// Finite-N simulation of S_N U_t S_N U_t^* with U_t a discretized unitary
/// Brownian motion on U(N).
struct SimConfig {
  int N = 512;
  double theta = 0.5;
  double dt = 0.01;
  double t_end = 1.0;
  int trials = 200;
  std::uint64_t seed = 0x5eed5eedULL;
  int threads = 0;       // 0: FREESPEC_THREADS or hardware concurrency
  int check_every = 25;  // steps between unitarity checks
};

struct MomentEstimate {
  int n = 0;
  double mean = 0.0;
  double std_error = 0.0;  // delete-one jackknife
  double max_imag = 0.0;   // largest |Im tr(...)/N| over trials
};

struct SimResult {
  double theta = 0.0;
  int N = 0;
  int trials = 0;
  std::vector<MomentEstimate> estimates;
  double max_unitarity_defect = 0.0;  // max |U^*U - I| entry over all checks
  int reorthonormalizations = 0;
  double seconds = 0.0;
};

/// Scale c with J_1(2c)/c = e^{-dt/2}: the increment e^{i c H}, H semicircular,
/// then has trace exactly e^{-dt/2}, which is what the e^{-dt/2} drift of the
/// Ito form contributes to tau(U_t) = e^{-t/2}.
double calibrated_step_scale(double dt);

/// Per trial: U <- exp(i c H) U for t_end/dt steps with independent GUE matrices
/// H (E|H_ij|^2 = 1/N), then tr((S U S U^*)^n)/N for each n in n_list.
/// One set of trajectories serves every theta in `thetas`; cfg.theta is ignored.
std::vector<SimResult> simulate_moments(const SimConfig& cfg, std::span<const double> thetas,
                                        std::span<const int> n_list);

/// Single-theta form using cfg.theta.
SimResult simulate_moments(const SimConfig& cfg, std::span<const int> n_list);

/// Delete-one jackknife standard error of the mean of `x`.
double jackknife_mean_error(std::span<const double> x);

/// Worker count: explicit request, else FREESPEC_THREADS, else hardware concurrency.
int resolve_threads(int requested);

}  // namespace freespec
