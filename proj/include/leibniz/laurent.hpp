#pragma once

#include <map>
#include <string>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Finite Laurent polynomial in one formal parameter t with rational
/// coefficients. Zero coefficients are never stored; zero is the empty map.
class LaurentScalar {
 public:
  using Terms = std::map<int, Rational>;

  LaurentScalar() = default;
  LaurentScalar(const Rational& constant);  // NOLINT(implicit)
  LaurentScalar(std::int64_t constant) : LaurentScalar(Rational(constant)) {}  // NOLINT(implicit)

  /// coefficient * t^exponent
  static LaurentScalar monomial(const Rational& coefficient, int exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  /// Smallest exponent with nonzero coefficient; 0 for the zero polynomial.
  int min_exponent() const;

  /// Substitutes a nonzero rational value for t.
  Rational evaluate(const Rational& t) const;

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(LaurentScalar a, const LaurentScalar& b) { return a *= b; }
  LaurentScalar operator-() const;

  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "2 + t^-1".
  std::string str() const;

 private:
  void add_term(int exponent, const Rational& c);
  Terms terms_;
};

/// Coefficient of t^0 when no negative power is present; throws NoLimit otherwise.
Rational laurent_limit(const LaurentScalar& s);

}  // namespace leibniz
