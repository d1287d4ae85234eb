#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "freespec/rank.hpp"

namespace freespec {

/// Coefficients of the closed-form characteristic phi(t, y) of
///   d/dt phi = (1/2)(phi^2 - 1) sqrt((1 - eps) y^2 + eps phi^2),  phi(0) = y.
struct FlowParams {
  double y = 1.0;
  double eps = 0.0;
  double a = 1.0;       // eps + (1 - eps) y^2
  double b = 1.0;       // a + eps
  double lambda = 0.0;  // (1 - eps)^2 y^2 (1 - y^2) / (1 + sqrt(a))^2

  static FlowParams make(const RankParam& rank, double y);
};

/// Raised when a trajectory is evaluated at or past its blow-up time.
class BlowupError : public std::domain_error {
 public:
  BlowupError(const std::string& what, double t_star)
      : std::domain_error(what), t_star_(t_star) {}
  double t_star() const { return t_star_; }

 private:
  double t_star_;
};

/// Time at which phi(., y) diverges; +infinity for 0 < y <= 1.
double blowup_time(const FlowParams& p);

/// phi^2(t, y). Throws BlowupError for t >= blowup_time(p).
double phi_squared(const FlowParams& p, double t);

/// phi(t, y) with the sign tracked along the trajectory: positive for y >= 1,
/// and for y < 1 positive until phi^2 touches 0, negative afterwards.
double phi(const FlowParams& p, double t);

/// Right-hand side of the characteristic ODE at the point phi.
double flow_rhs(const FlowParams& p, double phi_value);

/// y = (1 + z)/(1 - z) and its inverse.
double z_to_y(double z);
double y_to_z(double y);

/// psi(t, z) = (phi - 1)/(phi + 1) with y = (1 + z)/(1 - z), z in (-1, 1).
double psi(const RankParam& rank, double t, double z);

/// |H(t, psi)^2 - kappa^2 ((1 + psi)/(1 - psi))^2 - (1 - kappa^2) y^2| with H summed
/// to order N from numerically integrated moments. Throws std::domain_error when
/// |psi(t, z)| >= 1.
double conserved_identity_residual(const RankParam& rank, double t, double z, int N);
/// Same, reusing moments r_1..r_N at time t.
double conserved_identity_residual(const RankParam& rank, std::span<const double> r, double t,
                                   double z, int N);

struct BlowupPoint {
  double t = 0.0;
  double a = 0.0;
  double y = 0.0;
  double z = 0.0;
  /// Relative back-substitution residual of the defining equation.
  double residual = 0.0;
};

/// Starting point z_t in (0, 1) whose trajectory blows up exactly at time t.
/// For kappa != 0, sqrt(a) in (1, inf) is the unique root of
///   e^{sqrt(a) t} (|kappa| + sqrt(a)) = (sqrt(a) + 1)/(sqrt(a) - 1) (sqrt(a) - |kappa|);
/// for kappa = 0, z_t solves z e^{t (1 + z)/(1 - z)} = 1.
BlowupPoint blowup_point(const RankParam& rank, double t);

/// Weight |kappa| of the atom of mu_t at z = 1.
double atom_weight_mu_t(const RankParam& rank, double t);

/// (1 - psi)^2 [kappa^2 ((1 + psi)/(1 - psi))^2 + (1 - kappa^2) y^2] at the point z; this is
/// (1 - psi)^2 H(t, psi)^2 and tends to 4 kappa^2 as z increases to z_t.
double atom_limit_quantity(const RankParam& rank, double t, double z);

struct AtomLimitSample {
  double gap = 0.0;  // z_t - z
  double psi = 0.0;
  double value = 0.0;
};
/// atom_limit_quantity along z = z_t - gap for gap = 10^-1, ..., 10^-digits.
/// 1 - psi shrinks only like sqrt(gap), so the default goes down to 10^-14.
std::vector<AtomLimitSample> atom_limit_path(const RankParam& rank, double t, int digits = 14);

/// True iff phi(t, y1) < phi(t, y2) on every grid time before the earlier
/// blow-up and blowup_time(y2) < blowup_time(y1). Requires 1 < y1 < y2.
bool flow_monotonicity_check(const RankParam& rank, std::span<const double> t_grid, double y1,
                             double y2);

}  // namespace freespec
