#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "rtfcheck/exactnum/rational.hpp"

namespace rtfcheck::exactnum {

// A Laurent polynomial in the formal symbol q^s: a finite sum of c_m q^{ms}
// with rational c_m. Zero coefficients are never stored, so two values are
// equal exactly when their term maps are equal.
class QsLaurent {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Rational>;

  QsLaurent() = default;
  explicit QsLaurent(const Terms& terms);

  static QsLaurent constant(const Rational& c);
  static QsLaurent monomial(Exponent m, const Rational& c = Rational(1));

  // Inverse of to_string(). Accepts "0" for the zero polynomial.
  static QsLaurent parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Exponent m) const;

  // Sorted "m:c" pairs joined by '+', e.g. "-4:1+-2:4+0:6+2:4+4:1".
  // The zero polynomial prints as "0".
  std::string to_string() const;

  // True when c_m = c_{-m} for every m.
  bool is_symmetric() const;

  QsLaurent& operator+=(const QsLaurent& rhs);
  QsLaurent& operator-=(const QsLaurent& rhs);
  QsLaurent& operator*=(const QsLaurent& rhs);

  friend QsLaurent operator+(QsLaurent a, const QsLaurent& b) { return a += b; }
  friend QsLaurent operator-(QsLaurent a, const QsLaurent& b) { return a -= b; }
  friend QsLaurent operator*(QsLaurent a, const QsLaurent& b) { return a *= b; }
  friend bool operator==(const QsLaurent& a, const QsLaurent& b) = default;

 private:
  void add_term(Exponent m, const Rational& c);

  Terms terms_;
};

// (log q)^{-r} d^r/ds^r at s = 0, i.e. sum of m^r c_m with 0^0 = 1.
Rational normalized_derivative(const QsLaurent& poly, unsigned r);

}  // namespace rtfcheck::exactnum
