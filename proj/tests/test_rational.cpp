#include "doctest.h"

#include "golden/exact/errors.hpp"
#include "golden/exact/rational.hpp"

using golden::exact::ArithmeticError;
using golden::exact::Rational;

TEST_CASE("rational canonical form") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("0.8") == Rational(4, 5));
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("09/012") == Rational(3, 4));
  CHECK(Rational::parse("10/4").to_string() == "5/2");
  CHECK_THROWS_AS(Rational::parse("1e5"), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse(""), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("1."), ArithmeticError);
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(-a < b);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK_THROWS_AS(a / Rational(0), ArithmeticError);
  CHECK_THROWS_AS(Rational(0).reciprocal(), ArithmeticError);
}
