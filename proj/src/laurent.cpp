#include "leibniz/laurent.hpp"

#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

LaurentScalar::LaurentScalar(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentScalar LaurentScalar::monomial(const Rational& coefficient, int exponent) {
  LaurentScalar s;
  s.add_term(exponent, coefficient);
  return s;
}

Rational LaurentScalar::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentScalar::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

Rational LaurentScalar::evaluate(const Rational& t) const {
  if (t.is_zero()) throw std::domain_error("cannot evaluate a Laurent polynomial at t = 0");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational p = pow(t, static_cast<unsigned>(e < 0 ? -e : e));
    sum += e < 0 ? c / p : c * p;
  }
  return sum;
}

void LaurentScalar::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
  if (is_zero() || o.is_zero()) {
    terms_.clear();
    return *this;
  }
  LaurentScalar product;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) product.add_term(ea + eb, ca * cb);
  terms_ = std::move(product.terms_);
  return *this;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string LaurentScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != Rational(1)) os << c << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Rational laurent_limit(const LaurentScalar& s) {
  if (!s.is_zero() && s.min_exponent() < 0)
    throw NoLimit("no limit as t->0: term of degree " + std::to_string(s.min_exponent()) + " in " + s.str());
  return s.coefficient(0);
}

}  // namespace leibniz
