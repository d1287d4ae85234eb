#include "freespec/exppoly.hpp"

#include <cmath>
#include <stdexcept>

namespace freespec {

ExpPoly::ExpPoly(int frequency, Poly p) {
  if (!p.is_zero()) terms_.emplace(frequency, std::move(p));
}

Poly ExpPoly::part(int frequency) const {
  const auto it = terms_.find(frequency);
  return it == terms_.end() ? Poly{} : it->second;
}

int ExpPoly::max_frequency() const {
  if (terms_.empty()) throw std::logic_error("ExpPoly::max_frequency: zero element");
  return terms_.rbegin()->first;
}

int ExpPoly::min_frequency() const {
  if (terms_.empty()) throw std::logic_error("ExpPoly::min_frequency: zero element");
  return terms_.begin()->first;
}

Rational ExpPoly::at_zero() const {
  Rational acc(0);
  for (const auto& [k, p] : terms_) acc += p.coeff(0);
  return acc;
}

long double ExpPoly::eval_scaled(long double t, int shift) const {
  long double acc = 0.0L;
  for (const auto& [k, p] : terms_) {
    acc += std::exp(static_cast<long double>(k - shift) * t) * p(t);
  }
  return acc;
}

void ExpPoly::add_term(int frequency, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(frequency, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly ExpPoly::derivative() const {
  ExpPoly out;
  for (const auto& [k, p] : terms_) {
    out.add_term(k, p * Rational(k) + p.derivative());
  }
  return out;
}

// For k != 0, q = sum_j (-1)^j p^{(j)} / k^{j+1} solves q' + k q = p, so
// d/dt (e^{kt} q) = e^{kt} p.
ExpPoly ExpPoly::antiderivative() const {
  ExpPoly out;
  for (const auto& [k, p] : terms_) {
    if (k == 0) {
      out.add_term(0, p.antiderivative());
      continue;
    }
    const Rational inv_k = Rational(1) / Rational(k);
    Poly q;
    Poly dp = p;
    Rational factor = inv_k;
    while (!dp.is_zero()) {
      q += dp * factor;
      dp = dp.derivative();
      factor *= -inv_k;
    }
    out.add_term(k, q);
  }
  return out;
}

ExpPoly ExpPoly::shifted(int shift) const {
  ExpPoly out;
  for (const auto& [k, p] : terms_) out.terms_.emplace(k + shift, p);
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [k, p] : o.terms_) add_term(k, p);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [k, p] : o.terms_) add_term(k, -p);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, p] : terms_) p *= s;
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [ka, pa] : a.terms_) {
    for (const auto& [kb, pb] : b.terms_) out.add_term(ka + kb, pa * pb);
  }
  return out;
}

std::string ExpPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, p] = *it;
    if (!out.empty()) out += " + ";
    const std::string poly = p.str(var);
    if (k == 0) {
      out += "(" + poly + ")";
    } else {
      out += "(" + poly + ")*exp(" + (k == 1 ? "" : std::to_string(k) + "*") + var + ")";
    }
  }
  return out;
}

}  // namespace freespec
