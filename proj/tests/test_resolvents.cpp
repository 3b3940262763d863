#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <hopfren/errors.hpp>
#include <hopfren/resolvents.hpp>
#include <random>

using namespace hopfren;

namespace {

Rational plug(const MonicCubic& c, const Rational& x) {
  return ((x + c.a2) * x + c.a1) * x + c.a0;
}

}  // namespace

TEST_CASE("depressed cubic with a double root") {
  // x^3 - 3x + 2 = (x - 1)^2 (x + 2)
  auto roots = solveCubic({Rational(-1), Rational(1)});
  CHECK(std::abs(roots[0] - Complex(-2, 0)) < 1e-12);
  CHECK(std::abs(roots[1] - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(roots[2] - Complex(1, 0)) < 1e-12);
  CHECK(cubicResidual({Rational(-1), Rational(1)}, roots) < 1e-12);
}

TEST_CASE("radical formula over random rational cubics") {
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  for (int i = 0; i < 100; ++i) {
    DepressedCubic c{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    auto roots = solveCubic(c);
    CHECK(cubicResidual(c, roots) < 1e-9);
    // Vieta: sum of roots of the depressed cubic vanishes
    Complex s = roots[0] + roots[1] + roots[2];
    CHECK(std::abs(s) < 1e-9);
  }
}

TEST_CASE("monic cubic reduction") {
  // (X + 5)(X - 4)(X + 4) = X^3 + 5 X^2 - 16 X - 80
  MonicCubic m{Rational(5), Rational(-16), Rational(-80)};
  auto roots = solveMonicCubic(m);
  CHECK(std::abs(roots[0] - Complex(-5, 0)) < 1e-9);
  CHECK(std::abs(roots[1] - Complex(-4, 0)) < 1e-9);
  CHECK(std::abs(roots[2] - Complex(4, 0)) < 1e-9);
}

TEST_CASE("resolvent cubic of a quartic, exactly") {
  // quartic with roots {1, -1, 2, -2}: x^4 - 5 x^2 + 4
  DepressedQuartic q{Rational(-5), Rational(0), Rational(4)};
  MonicCubic r = resolventCubicOfQuartic(q);
  CHECK(r.a2 == Rational(5));
  CHECK(r.a1 == Rational(-16));
  CHECK(r.a0 == Rational(-80));
  // its roots are the pairings ab+cd: {1*-1 + 2*-2, 1*2 + -1*-2, 1*-2 + -1*2}
  CHECK(plug(r, Rational(-5)).isZero());
  CHECK(plug(r, Rational(4)).isZero());
  CHECK(plug(r, Rational(-4)).isZero());
}

TEST_CASE("pairing values annihilate the resolvent over random quartics") {
  std::mt19937 rng(77u);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 4);
  for (int i = 0; i < 100; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    Rational d = -(a + b + c);  // depressed: roots sum to zero
    Rational p = a * b + a * c + a * d + b * c + b * d + c * d;
    Rational qq = -(a * b * c + a * b * d + a * c * d + b * c * d);
    Rational r = a * b * c * d;
    MonicCubic res = resolventCubicOfQuartic({p, qq, r});
    CHECK(plug(res, a * b + c * d).isZero());
    CHECK(plug(res, a * c + b * d).isZero());
    CHECK(plug(res, a * d + b * c).isZero());
  }
}

TEST_CASE("quartic roots by radicals") {
  DepressedQuartic q{Rational(-5), Rational(0), Rational(4)};
  auto roots = solveQuartic(q);
  CHECK(quarticResidual(q, roots) < 1e-9);
  CHECK(std::abs(roots[0] - Complex(-2, 0)) < 1e-9);
  CHECK(std::abs(roots[3] - Complex(2, 0)) < 1e-9);

  std::mt19937 rng(99u);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  for (int i = 0; i < 100; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    Rational d = -(a + b + c);
    DepressedQuartic qi{a * b + a * c + a * d + b * c + b * d + c * d,
                        -(a * b * c + a * b * d + a * c * d + b * c * d), a * b * c * d};
    auto ri = solveQuartic(qi);
    CHECK(quarticResidual(qi, ri) < 1e-9);
  }
}

TEST_CASE("rational covariant") {
  CHECK(covariantResolvent(Rational(1), Rational(2), Rational(3), Rational(5)) == Rational(-1));
  // exact equivariance under a simultaneous affine map
  Rational a(3), b(-1), c(2, 3), d(7, 2);
  Rational lam(5, 4), mu(-3);
  Rational base = covariantResolvent(a, b, c, d);
  CHECK(covariantResolvent(lam * a + mu, lam * b + mu, lam * c + mu, lam * d + mu) ==
        lam * base + mu);
  CHECK_THROWS_AS(covariantResolvent(Rational(1), Rational(2), Rational(3), Rational(4)),
                  DegenerateConfigError);
}

TEST_CASE("complex covariant orbit under relabeling") {
  std::mt19937 rng(5u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::array<Complex, 4> pts;
  for (auto& z : pts) z = Complex(u(rng), u(rng));
  std::array<int, 4> idx{0, 1, 2, 3};
  std::vector<Complex> values;
  do {
    values.push_back(
        covariantResolvent(pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]]));
  } while (std::next_permutation(idx.begin(), idx.end()));
  // the 24 relabelings hit exactly the 3 pairings, 8 times each
  std::vector<Complex> distinct;
  for (Complex v : values) {
    bool seen = false;
    for (Complex w : distinct) seen = seen || std::abs(v - w) < 1e-9;
    if (!seen) distinct.push_back(v);
  }
  CHECK(distinct.size() == 3);
}

TEST_CASE("geometric construction meets the algebraic covariant") {
  CHECK_THROWS_AS(lineIntersect(Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(1, 1)),
                  DegenerateConfigError);
  CHECK_THROWS_AS(circumcenter(Complex(0, 0), Complex(1, 0), Complex(2, 0)),
                  DegenerateConfigError);

  std::mt19937 rng(31u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    Complex a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng)), d(u(rng), u(rng));
    Complex alg;
    try {
      alg = covariantResolvent(a, b, c, d);
    } catch (const DegenerateConfigError&) {
      continue;  // measure-zero configuration drawn; skip
    }
    CHECK(std::abs(circumcircleMeet(a, b, c, d) - alg) < 1e-9);
  }
}

TEST_CASE("five-circle star check") {
  // exact regular pentagon: the five meets are concyclic to machine precision
  std::array<Complex, 5> regular;
  for (int k = 0; k < 5; ++k) {
    double ang = 2 * M_PI * k / 5 + M_PI / 2;
    regular[k] = Complex(std::cos(ang), std::sin(ang));
  }
  StarCheckResult r = starCheck(regular);
  CHECK(r.maxDeviation < 1e-12);

  // scale and translation invariance built in by normalization
  std::array<Complex, 5> moved;
  for (int k = 0; k < 5; ++k) moved[k] = regular[k] * 250.0 + Complex(1e4, -3e3);
  CHECK(starCheck(moved).maxDeviation < 1e-9);

  // three consecutive collinear vertices collapse a spike triangle
  std::array<Complex, 5> degenerate{Complex(-2, 0), Complex(0, 0), Complex(2, 0),
                                    Complex(1, 3), Complex(-1, 3)};
  CHECK_THROWS_AS(starCheck(degenerate), DegenerateConfigError);
}

TEST_CASE("random pentagon sweep") {
  auto p = randomPentagon(42);
  auto q = randomPentagon(42);
  for (int k = 0; k < 5; ++k) CHECK(p[k] == q[k]);  // bitwise deterministic
  CHECK(randomPentagon(43)[0] != p[0]);

  std::vector<double> serial = starSweep(100, 20260816ull, Parallelism::Serial);
  REQUIRE(serial.size() == 100);
  for (double dev : serial) CHECK(dev < 1e-9);

  std::vector<double> parallel = starSweep(100, 20260816ull, Parallelism::Parallel);
  CHECK(serial == parallel);  // bitwise identical

  CHECK_THROWS_AS(starSweep(-1, 0), DomainError);
}
