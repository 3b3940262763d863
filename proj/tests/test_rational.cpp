#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfren/errors.hpp>
#include <hopfren/rational.hpp>

using namespace hopfren;

TEST_CASE("construction and normalization") {
  CHECK(Rational().isZero());
  CHECK(Rational(1).isOne());
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(-4, 6) == Rational(2, -3));
  CHECK(Rational(3, -9) == Rational(-1, 3));
  CHECK(Rational(0, 7).isZero());
  CHECK_THROWS_AS(Rational(1, 0), SingularError);
}

TEST_CASE("fromString") {
  CHECK(Rational::fromString("5") == Rational(5));
  CHECK(Rational::fromString("-7/2") == Rational(-7, 2));
  CHECK(Rational::fromString("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::fromString(""), ParseError);
  CHECK_THROWS_AS(Rational::fromString("1/0"), SingularError);
  CHECK_THROWS_AS(Rational::fromString("x"), ParseError);
  CHECK_THROWS_AS(Rational::fromString("1/2/3"), ParseError);
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational(), SingularError);

  Rational c(2, 7);
  c += Rational(5, 7);
  CHECK(c.isOne());
  c *= Rational(0);
  CHECK(c.isZero());
}

TEST_CASE("queries") {
  Rational a(-3, 4);
  CHECK(a.sign() == -1);
  CHECK(a.abs() == Rational(3, 4));
  CHECK(a.inverse() == Rational(-4, 3));
  CHECK_FALSE(a.isInteger());
  CHECK(Rational(8, 4).isInteger());
  CHECK(Rational(8, 4).num() == 2);
  CHECK(Rational(8, 4).den() == 1);
  CHECK(a.str() == "-3/4");
  CHECK(Rational(5).str() == "5");
  CHECK(a.toDouble() == doctest::Approx(-0.75));
  CHECK_THROWS_AS(Rational().inverse(), SingularError);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK_FALSE(Rational(2, 4) < Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1) != Rational(2));
}

TEST_CASE("factorial and pow") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK_THROWS_AS(factorial(-1), DomainError);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(5), 0).isOne());
  CHECK_THROWS_AS(pow(Rational(2), -1), DomainError);
}
