#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfren/errors.hpp>
#include <hopfren/laurent.hpp>
#include <hopfren/param_poly.hpp>

using namespace hopfren;

static LaurentSeries L(const std::string& s, int trunc = kExactOrder) {
  return parseLaurent(s, trunc);
}

TEST_CASE("param polynomials") {
  ParamPoly l = ParamPoly::variable(Param::L);
  ParamPoly t = ParamPoly::variable(Param::T);
  ParamPoly p = l * l + ParamPoly(Rational(3)) * t;
  CHECK(p.degreeIn(Param::L) == 2);
  CHECK(p.degreeIn(Param::T) == 1);
  CHECK(p.totalDegree() == 2);
  CHECK_FALSE(p.isConstant());
  CHECK(p.substitute(Param::T, ParamPoly()) == l * l);
  // shift L -> L + T, then kill T: back where we started
  CHECK(p.substitute(Param::L, l + t).substitute(Param::T, ParamPoly()) == l * l);
  CHECK((p - p).isZero());
  CHECK(ParamPoly(Rational(7)).constantValue() == Rational(7));
  CHECK(p.constantValue() == Rational(0));  // no constant monomial present
  CHECK(p.str() == "3 t + L^2");
}

TEST_CASE("series windows under arithmetic") {
  // window [minDeg, trunc]: product of windows [m_a,N_a],[m_b,N_b] is
  // truncated at min(N_a+m_b, N_b+m_a)
  LaurentSeries a = LaurentSeries::fromCoeffs(-1, {Rational(1), Rational(1)}, 3);
  LaurentSeries b = LaurentSeries::fromCoeffs(2, {Rational(1)}, 5);
  LaurentSeries p = a * b;
  CHECK(p.coeff(1) == Rational(1));
  CHECK(p.coeff(2) == Rational(1));
  CHECK(p.coeff(4) == Rational(0));  // min(3+2, 5-1) = 4 still inside
  CHECK_THROWS_AS(p.coeff(5), TruncationError);

  LaurentSeries s = a + b;
  CHECK(s.coeff(3) == Rational(0));
  CHECK_THROWS_AS(s.coeff(4), TruncationError);

  // exact inputs stay exact
  LaurentSeries e = L("1 + eps") * L("1 - eps");
  CHECK(e.coeff(100) == Rational(0));
  CHECK(e == L("1 - eps^2"));
}

TEST_CASE("coeff access and degree queries") {
  LaurentSeries x = L("1/eps + 2 + 3 eps", 4);
  CHECK(x.minDegree() == -1);
  CHECK(x.coeff(-2) == Rational(0));  // below minDegree is known-zero
  CHECK(x.coeff(4) == Rational(0));
  CHECK_THROWS_AS(x.coeff(5), TruncationError);
  CHECK(x.maxStoredDegree() == 1);
  CHECK_THROWS_AS(LaurentSeries::zero().maxStoredDegree(), IndexError);
  CHECK(LaurentSeries::zero().isZero());
}

TEST_CASE("pole and constant extraction") {
  LaurentSeries x = L("(1/2)/eps^2 - (3/2)/eps + 7 + eps", 6);
  CHECK(x.hasPole());
  LaurentSeries pp = x.polePart();
  CHECK(pp == L("(1/2)/eps^2 - (3/2)/eps"));
  CHECK(pp.coeff(50) == Rational(0));  // pole part is exact
  CHECK(x.holoPart() == LaurentSeries::fromCoeffs(0, {Rational(7), Rational(1)}, 6));
  CHECK(x.coeff(0) == ParamPoly(Rational(7)));
  CHECK_THROWS_AS(x.constantTerm(), PoleError);
  CHECK_THROWS_AS(x.withTruncation(-2).polePart(), TruncationError);

  LaurentSeries holo = L("2 + eps", 5);
  CHECK_FALSE(holo.hasPole());
  CHECK(holo.polePart().isZero());
  CHECK(holo.constantTerm() == ParamPoly(Rational(2)));
}

TEST_CASE("scaling and shifting") {
  LaurentSeries x = L("1/eps + 1", 3);
  CHECK(x.scaled(Rational(2)) == L("2/eps + 2", 3));
  CHECK(x.shifted(2).minDegree() == 1);
  CHECK(x.shifted(2).coeff(1) == Rational(1));
  ParamPoly l = ParamPoly::variable(Param::L);
  LaurentSeries lx = x.scaledPoly(l);
  CHECK(lx.coeff(0) == l);
}

TEST_CASE("inverse") {
  LaurentSeries x = L("1 - eps", 4);
  LaurentSeries inv = x.inverse();
  CHECK(inv.coeff(0) == Rational(1));
  CHECK(inv.coeff(3) == Rational(1));
  CHECK((x * inv).coeff(0) == Rational(1));
  CHECK((x * inv).coeff(3) == Rational(0));

  // exact monomial inverts exactly
  LaurentSeries m = L("2 eps^2");
  CHECK(m.inverse() == L("(1/2)/eps^2"));
  CHECK(m.inverse().coeff(10) == Rational(0));

  // exact non-monomial has no exact inverse
  CHECK_THROWS_AS(L("1 + eps").inverse(), TruncationError);
  CHECK_THROWS_AS(LaurentSeries::zero().inverse(), SingularError);
  // leading coefficient must not involve parameters
  ParamPoly l = ParamPoly::variable(Param::L);
  LaurentSeries bad = LaurentSeries::monomial(0, l).withTruncation(3);
  CHECK_THROWS_AS(bad.inverse(), SingularError);
}

TEST_CASE("expScaled") {
  ParamPoly l = ParamPoly::variable(Param::L);
  LaurentSeries e = LaurentSeries::expScaled(2, Param::L, 3);
  CHECK(e.coeff(0) == ParamPoly(Rational(1)));
  CHECK(e.coeff(1) == l.scaled(Rational(2)));
  CHECK(e.coeff(2) == (l * l).scaled(Rational(2)));
  CHECK(e.coeff(3) == (l * l * l).scaled(Rational(4, 3)));
  CHECK_THROWS_AS(e.coeff(4), TruncationError);

  // k = 0 gives the exact constant 1
  LaurentSeries one = LaurentSeries::expScaled(0, Param::L, 3);
  CHECK(one.coeff(1000) == Rational(0));
  CHECK_THROWS_AS(LaurentSeries::expScaled(1, Param::L, kExactOrder),
                  TruncationError);
  CHECK_THROWS_AS(LaurentSeries::expScaled(1, Param::L, 5000), DomainError);
}

TEST_CASE("substitution and parameter degrees") {
  ParamPoly l = ParamPoly::variable(Param::L);
  ParamPoly t = ParamPoly::variable(Param::T);
  LaurentSeries x = LaurentSeries::monomial(-1, l) + LaurentSeries::constant(Rational(1));
  CHECK(x.maxDegreeIn(Param::L) == 1);
  CHECK(x.maxDegreeIn(Param::T) == 0);
  LaurentSeries y = x.substitute(Param::L, l + t);
  CHECK(y.coeff(-1) == l + t);
  CHECK(y.substitute(Param::T, ParamPoly()) == x);
}

TEST_CASE("equality and window agreement") {
  // content equality ignores the truncation window
  CHECK(L("1 + eps", 3) == L("1 + eps", 9));
  LaurentSeries a = L("1 + eps", 3);
  LaurentSeries b = L("1 + eps + eps^4", 5);
  CHECK(agreesUpTo(a, b, 3));
  CHECK_FALSE(agreesOnCommonWindow(a, b + L("eps^2")));
  CHECK(agreesOnCommonWindow(a, b));
  CHECK_THROWS_AS(agreesUpTo(a, b, 4), TruncationError);
}

TEST_CASE("render and parse round trips") {
  CHECK(L("-1/eps").str() == "-1/eps");
  CHECK(LaurentSeries::zero().str() == "0");
  CHECK(L("2 eps^2").str() == "2 eps^2");
  ParamPoly l = ParamPoly::variable(Param::L);
  CHECK(LaurentSeries::monomial(1, l).str() == "L eps");
  LaurentSeries mixed =
      LaurentSeries::monomial(-1, l + ParamPoly(Rational(3, 2))) +
      LaurentSeries::constant(Rational(7, 2));
  CHECK(mixed == L(mixed.str()));
  CHECK(mixed.str().find("(3/2 + L)/eps") != std::string::npos);

  for (const char* s : {"1/eps + 1 + eps", "(1/2)/eps^2 - (1/2)/eps", "-2 + L eps",
                        "t^2 + L t", "3/4 eps^3", "(1 + L)(1 - L) eps^2", "1 - (s + t) eps"}) {
    LaurentSeries v = L(s);
    CHECK(v == L(v.str()));
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(L("1 +"), ParseError);
  CHECK_THROWS_AS(L("bogus"), ParseError);
  CHECK_THROWS_AS(L("eps^"), ParseError);
  CHECK_THROWS_AS(L("(1 + eps"), ParseError);
  CHECK_THROWS_AS(L("1/(1 + eps)"), ParseError);  // division only by exact monomials
  CHECK_THROWS_AS(L("1/0"), ParseError);  // caught before Rational sees it
  try {
    L("1 + @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}
