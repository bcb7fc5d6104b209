#include <doctest.h>

#include <cmath>
#include <random>

#include "rtfcheck/errors.hpp"
#include "rtfcheck/exactnum/laurent.hpp"
#include "rtfcheck/exactnum/rational.hpp"

using rtfcheck::exactnum::BigInt;
using rtfcheck::exactnum::QsLaurent;
using rtfcheck::exactnum::Rational;
using rtfcheck::exactnum::normalized_derivative;

namespace {

QsLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 5);
  std::uniform_int_distribution<int> exponent(-6, 6);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  QsLaurent out;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    out += QsLaurent::monomial(exponent(rng), Rational(BigInt(num(rng)), BigInt(den(rng))));
  }
  return out;
}

}  // namespace

TEST_CASE("rational normal form and printing") {
  CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
  CHECK(Rational(BigInt(6), BigInt(-4)).denominator() == 2);
  CHECK(Rational(BigInt(8), BigInt(4)).to_string() == "2");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational::parse("-10/4") == Rational(BigInt(-5), BigInt(2)));
  CHECK(Rational::parse("7").is_integer());
  CHECK((Rational(1) / Rational(3) + Rational(2) / Rational(3)) == Rational(1));
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), rtfcheck::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("abc"), rtfcheck::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1/0"), rtfcheck::InvalidArgument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), rtfcheck::InvalidArgument);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(2)).to_integer(), rtfcheck::InternalError);
}

TEST_CASE("integer helpers") {
  CHECK(rtfcheck::exactnum::ipow(BigInt(0), 0) == 1);
  CHECK(rtfcheck::exactnum::ipow(BigInt(-2), 5) == -32);
  CHECK(rtfcheck::exactnum::factorial(10) == 3628800);
  CHECK(rtfcheck::exactnum::binomial(6, 2) == 15);
  CHECK(rtfcheck::exactnum::binomial(4, 5) == 0);
  CHECK(rtfcheck::exactnum::binomial(4, -1) == 0);
}

TEST_CASE("laurent arithmetic examples") {
  const QsLaurent up = QsLaurent::monomial(2);
  const QsLaurent down = QsLaurent::monomial(-2);
  CHECK((up + down).to_string() == "-2:1+2:1");
  CHECK((up * down) == QsLaurent::constant(1));
  const QsLaurent one = QsLaurent::constant(1);
  CHECK(((one + up) * (one - up)).to_string() == "0:1+4:-1");
  CHECK((up - up).is_zero());
  CHECK((up - up).to_string() == "0");
}

TEST_CASE("laurent serialization round trip") {
  const QsLaurent p = QsLaurent::parse("-4:1+-2:4+0:6+2:4+4:1");
  CHECK(p.to_string() == "-4:1+-2:4+0:6+2:4+4:1");
  CHECK(p.is_symmetric());
  CHECK(QsLaurent::parse("0").is_zero());
  CHECK(QsLaurent::parse("3:-1/2").coefficient(3) == Rational(BigInt(-1), BigInt(2)));
  CHECK_THROWS_AS(QsLaurent::parse("3"), rtfcheck::InvalidArgument);
  CHECK_THROWS_AS(QsLaurent::parse("x:1"), rtfcheck::InvalidArgument);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const QsLaurent a = random_laurent(rng);
    CHECK(QsLaurent::parse(a.to_string()) == a);
    for (const auto& [m, c] : a.terms()) CHECK_FALSE(c.is_zero());
  }
}

TEST_CASE("normalized derivative examples") {
  const QsLaurent sym = QsLaurent::monomial(2) + QsLaurent::monomial(-2);
  CHECK(normalized_derivative(sym, 2) == Rational(8));
  CHECK(normalized_derivative(sym, 1) == Rational(0));
  const QsLaurent binom = QsLaurent::parse("-4:1+-2:4+0:6+2:4+4:1");
  CHECK(normalized_derivative(binom, 2) == Rational(64));
  CHECK(normalized_derivative(binom, 0) == Rational(16));
  CHECK(normalized_derivative(QsLaurent::constant(5), 0) == Rational(5));
  CHECK(normalized_derivative(QsLaurent::constant(5), 3) == Rational(0));
}

TEST_CASE("normalized derivative against finite differences") {
  // With q = e the normalization factor is 1, so the functional is the plain
  // derivative of sum c_m exp(m s) at s = 0.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const QsLaurent p = random_laurent(rng);
    auto f = [&](double s) {
      double total = 0;
      for (const auto& [m, c] : p.terms()) total += c.raw().get_d() * std::exp(static_cast<double>(m) * s);
      return total;
    };
    const double h = 1e-4;
    const double d1 = (f(h) - f(-h)) / (2 * h);
    const double d2 = (f(h) - 2 * f(0) + f(-h)) / (h * h);
    CHECK(d1 == doctest::Approx(normalized_derivative(p, 1).raw().get_d()).epsilon(1e-5));
    CHECK(d2 == doctest::Approx(normalized_derivative(p, 2).raw().get_d()).epsilon(1e-3));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const QsLaurent a = random_laurent(rng);
    const QsLaurent b = random_laurent(rng);
    const QsLaurent c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a - a == QsLaurent());
    CHECK(a * QsLaurent::constant(1) == a);
  }
}

TEST_CASE("derivative is linear and odd orders vanish on symmetric input") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const QsLaurent a = random_laurent(rng);
    const QsLaurent b = random_laurent(rng);
    for (unsigned r = 0; r <= 8; ++r) {
      CHECK(normalized_derivative(a + b, r) == normalized_derivative(a, r) + normalized_derivative(b, r));
    }
    QsLaurent sym;
    for (const auto& [m, c] : a.terms()) {
      sym += QsLaurent::monomial(2 * m, c) + QsLaurent::monomial(-2 * m, c);
    }
    CHECK(sym.is_symmetric());
    for (unsigned r : {1U, 3U, 5U, 7U}) CHECK(normalized_derivative(sym, r).is_zero());
  }
}
