#pragma once

#include <string>

#include "freespec/rational.hpp"

namespace freespec {

/// Rank of the projection P, theta = tau(P) in (0, 1], together with
/// kappa = tau(2P - 1) = 2 theta - 1 and eps = kappa^2.
class RankParam {
 public:
  explicit RankParam(Rational theta);
  static RankParam parse(const std::string& theta) { return RankParam(Rational::parse(theta)); }

  const Rational& theta() const { return theta_; }
  const Rational& kappa() const { return kappa_; }
  const Rational& eps() const { return eps_; }
  Rational abs_kappa() const { return kappa_.abs(); }

  double theta_d() const { return theta_.to_double(); }
  double kappa_d() const { return kappa_.to_double(); }
  double eps_d() const { return eps_.to_double(); }
  double abs_kappa_d() const { return abs_kappa().to_double(); }

 private:
  Rational theta_;
  Rational kappa_;
  Rational eps_;
};

}  // namespace freespec
