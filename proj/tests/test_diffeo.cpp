#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfren/diffeo.hpp>
#include <hopfren/errors.hpp>
#include <hopfren/hopf.hpp>

using namespace hopfren;

namespace {

LaurentSeries L(const std::string& s) { return parseLaurent(s); }

FormalDiffeo rationalDiffeo(unsigned seed, int n) {
  // small deterministic pseudo-random rationals, exact arithmetic throughout
  std::vector<Rational> cs;
  unsigned x = seed * 2654435761u + 1u;
  for (int i = 0; i < n; ++i) {
    x = x * 1664525u + 1013904223u;
    long num = static_cast<long>((x >> 16) % 7) - 3;
    long den = 1 + static_cast<long>((x >> 8) % 4);
    cs.emplace_back(num, den);
  }
  return FormalDiffeo::fromRationals(cs);
}

FormalDiffeo rationalLoop(unsigned seed, int n) {
  std::vector<LaurentSeries> cs;
  unsigned x = seed * 40503u + 7u;
  auto draw = [&x]() {
    x = x * 1664525u + 1013904223u;
    return Rational(static_cast<long>((x >> 16) % 9) - 4, 1 + static_cast<long>((x >> 8) % 3));
  };
  for (int i = 0; i < n; ++i) {
    LaurentSeries c = LaurentSeries::monomial(-2, draw()) + LaurentSeries::monomial(-1, draw()) +
                      LaurentSeries::constant(draw()) + LaurentSeries::monomial(1, draw());
    cs.push_back(c);
  }
  return FormalDiffeo(cs);
}

}  // namespace

TEST_CASE("coefficient access") {
  FormalDiffeo f = FormalDiffeo::fromRationals({Rational(1, 2), Rational(-1)});
  CHECK(f.orderBound() == 2);
  CHECK(f.coeff(1) == LaurentSeries::constant(Rational(1, 2)));
  CHECK_THROWS_AS(f.coeff(0), IndexError);
  CHECK_THROWS_AS(f.coeff(3), IndexError);
  CHECK(FormalDiffeo::identity(3).isIdentity());
  CHECK_FALSE(f.isIdentity());
}

TEST_CASE("composition and inversion") {
  // f(g) = g + a g^3: inverse is g - a g^3 + 3 a^2 g^5 - 12 a^3 g^7
  FormalDiffeo f = FormalDiffeo::fromRationals({Rational(1), Rational(0), Rational(0)});
  FormalDiffeo inv = invertDiffeo(f);
  CHECK(inv.coeff(1) == LaurentSeries::constant(Rational(-1)));
  CHECK(inv.coeff(2) == LaurentSeries::constant(Rational(3)));
  CHECK(inv.coeff(3) == LaurentSeries::constant(Rational(-12)));
  CHECK(compose(f, inv).isIdentity());
  CHECK(compose(inv, f).isIdentity());

  // composition is associative and identity-neutral over random inputs
  for (unsigned seed : {1u, 2u, 3u}) {
    FormalDiffeo u = rationalDiffeo(seed, 4);
    FormalDiffeo v = rationalDiffeo(seed + 10, 4);
    FormalDiffeo w = rationalDiffeo(seed + 20, 4);
    CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
    CHECK(compose(u, FormalDiffeo::identity(4)) == u);
    CHECK(compose(FormalDiffeo::identity(4), u) == u);
    CHECK(compose(u, invertDiffeo(u)).isIdentity());
  }
}

TEST_CASE("coordinate coproduct on the diffeomorphism group") {
  auto inst = fdbInstance();
  CHECK(inst->degreeOf("a3") == 3);
  CHECK_THROWS_AS(inst->degreeOf("b3"), IndexError);
  CHECK(inst->generatorsOfDegree(2) == std::vector<GenKey>{"a2"});

  auto d2 = inst->reducedCoproduct("a2");
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].left == makeMonomial({"a1"}));
  CHECK(d2[0].right == makeMonomial({"a1"}));
  CHECK(d2[0].coeff == Rational(3));

  auto d3 = inst->reducedCoproduct("a3");
  TensorElement got;
  for (const auto& term : d3) got[{term.left, term.right}] = term.coeff;
  TensorElement want;
  want[{makeMonomial({"a1"}), makeMonomial({"a2"})}] = Rational(3);
  want[{makeMonomial({"a1"}), makeMonomial({"a1", "a1"})}] = Rational(3);
  want[{makeMonomial({"a2"}), makeMonomial({"a1"})}] = Rational(5);
  CHECK(got == want);
}

TEST_CASE("evaluation characters turn composition into convolution") {
  auto inst = fdbInstance();
  for (unsigned seed : {4u, 5u}) {
    FormalDiffeo u = rationalDiffeo(seed, 4);
    FormalDiffeo v = rationalDiffeo(seed + 7, 4);
    Character pu = characterOfDiffeo(u, 4);
    Character pv = characterOfDiffeo(v, 4);
    Character conv = convolve(pu, pv);
    FormalDiffeo uv = compose(u, v);
    for (int n = 1; n <= 4; ++n)
      CHECK(conv.genValue("a" + std::to_string(n)) == uv.coeff(n));

    // group inverse matches convolution inverse
    Character pinv = inverseCharacter(pu);
    FormalDiffeo w = invertDiffeo(u);
    for (int n = 1; n <= 4; ++n)
      CHECK(pinv.genValue("a" + std::to_string(n)) == w.coeff(n));

    CHECK(diffeoOfCharacter(pu) == u);
  }
  CHECK_THROWS_AS(characterOfDiffeo(FormalDiffeo::identity(2), 3), DomainError);
}

TEST_CASE("opposed splitting of a diffeomorphism-valued loop") {
  // single-coefficient case pinned by hand
  FormalDiffeo loop1(std::vector<LaurentSeries>{L("2/eps + 3 + eps")});
  DiffeoBirkhoff b1 = birkhoffDiffeo(loop1);
  CHECK(b1.negative.coeff(1) == L("-2/eps"));
  CHECK(b1.positive.coeff(1) == L("3 + eps"));

  for (unsigned seed : {11u, 12u, 13u}) {
    FormalDiffeo loop = rationalLoop(seed, 4);
    DiffeoBirkhoff bb = birkhoffDiffeo(loop);

    // structure: negative coefficients pure poles, positive ones pole-free
    for (int n = 1; n <= 4; ++n) {
      LaurentSeries neg = bb.negative.coeff(n);
      CHECK(neg.holoPart().isZero());
      CHECK_FALSE(bb.positive.coeff(n).hasPole());
    }
    CHECK_NOTHROW(evalAtZero(bb.positive));

    // reconstruction is exact: loop = positive o negative^{-1}
    CHECK(compose(bb.positive, invertDiffeo(bb.negative)) == loop);

    // and it agrees with the generic engine run on the inverse loop
    FormalDiffeo w = invertDiffeo(loop);
    BirkhoffPair pair = birkhoff(characterOfDiffeo(w, 4), Parallelism::Serial);
    CHECK(bb.negative == invertDiffeo(diffeoOfCharacter(pair.negative)));
    CHECK(bb.positive == invertDiffeo(diffeoOfCharacter(pair.positive)));
  }

  CHECK_THROWS_AS(evalAtZero(rationalLoop(11u, 3)), PoleError);
}

TEST_CASE("toy effective coupling") {
  auto inst = treeInstance();
  Character phi = toyTreeCharacter(inst, 5, 10);
  FormalDiffeo eff = effectiveCouplingToy(phi, 2);

  LaurentSeries v1 = phi.genValue("o");
  LaurentSeries v2 = phi.genValue("B[o]");
  CHECK(agreesOnCommonWindow(eff.coeff(1), v1.scaled(Rational(5, 2))));
  LaurentSeries expected2 = v2.scaled(Rational(5, 2)) + (v1 * v1).scaled(Rational(27, 8));
  CHECK(agreesOnCommonWindow(eff.coeff(2), expected2));
  CHECK_THROWS_AS(effectiveCouplingToy(phi, -1), DomainError);
}
