#pragma once

#include <map>
#include <string>

#include "freespec/poly.hpp"

namespace freespec {

/// Finite sum  sum_k e^{k t} p_k(t)  with p_k exact rational polynomials.
/// Frequencies are integers (negative ones appear after rescaling by e^{-nt}).
/// Zero polynomials are never stored.
class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(int frequency, Poly p);
  static ExpPoly constant(const Rational& c) { return ExpPoly(0, Poly::constant(c)); }

  const std::map<int, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Polynomial multiplying e^{k t}; zero if absent.
  Poly part(int frequency) const;
  int max_frequency() const;
  int min_frequency() const;

  /// Value at t = 0, exact.
  Rational at_zero() const;
  /// Value at t.
  long double operator()(long double t) const { return eval_scaled(t, 0); }
  /// e^{-shift t} times the value at t, computed term by term so that large
  /// frequencies never overflow.
  long double eval_scaled(long double t, int shift) const;

  ExpPoly derivative() const;
  /// An antiderivative; frequency-0 parts get zero constant term.
  ExpPoly antiderivative() const;
  /// Multiply by e^{shift t}.
  ExpPoly shifted(int shift) const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const Rational& s);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const Rational& s) { return a *= s; }
  friend ExpPoly operator*(const Rational& s, ExpPoly a) { return a *= s; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

  std::string str(const std::string& var = "t") const;

 private:
  void add_term(int frequency, const Poly& p);
  std::map<int, Poly> terms_;
};

}  // namespace freespec
