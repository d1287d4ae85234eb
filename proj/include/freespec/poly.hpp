#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "freespec/rational.hpp"

namespace freespec {

/// Dense univariate polynomial with exact rational coefficients; index = degree.
/// The highest stored coefficient is nonzero unless the polynomial is zero, in
/// which case the coefficient vector is empty.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly monomial(unsigned degree, const Rational& coeff = Rational(1));

  bool is_zero() const { return c_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;
  long double operator()(long double x) const;

  Poly derivative() const;
  /// Antiderivative with zero constant term.
  Poly antiderivative() const;
  /// p(q(x)).
  Poly compose(const Poly& inner) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form such as "3/2*x + 1/2".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace freespec
