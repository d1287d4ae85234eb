#include "freespec/rank.hpp"

#include <stdexcept>

namespace freespec {

RankParam::RankParam(Rational theta) : theta_(std::move(theta)) {
  if (theta_ <= Rational(0) || theta_ > Rational(1)) {
    throw std::invalid_argument("RankParam: theta must lie in (0, 1], got " + theta_.str());
  }
  kappa_ = Rational(2) * theta_ - Rational(1);
  eps_ = kappa_ * kappa_;
}

}  // namespace freespec
