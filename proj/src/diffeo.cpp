#include "hopfren/diffeo.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "hopfren/errors.hpp"

namespace hopfren {

namespace {

// Dense polynomial in g with series coefficients, indexed by the g-power,
// truncated above degree cap.
using GPoly = std::vector<LaurentSeries>;

GPoly toPoly(const FormalDiffeo& f, int bound) {
  GPoly p(static_cast<size_t>(2 * bound + 2));
  p[1] = LaurentSeries::constant(Rational(1));
  for (int n = 1; n <= bound; ++n) p[static_cast<size_t>(2 * n + 1)] = f.coeff(n);
  return p;
}

GPoly polyMul(const GPoly& a, const GPoly& b, int cap) {
  GPoly out(static_cast<size_t>(cap) + 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero()) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(cap); ++j) {
      if (b[j].isZero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

FormalDiffeo::FormalDiffeo(std::vector<LaurentSeries> oddCoeffs) : coeffs_(std::move(oddCoeffs)) {}

FormalDiffeo FormalDiffeo::identity(int orderBound) {
  if (orderBound < 0) throw DomainError("negative order bound");
  return FormalDiffeo(std::vector<LaurentSeries>(static_cast<size_t>(orderBound)));
}

FormalDiffeo FormalDiffeo::fromRationals(const std::vector<Rational>& coeffs) {
  std::vector<LaurentSeries> cs;
  cs.reserve(coeffs.size());
  for (const Rational& c : coeffs) cs.push_back(LaurentSeries::constant(c));
  return FormalDiffeo(std::move(cs));
}

const LaurentSeries& FormalDiffeo::coeff(int n) const {
  if (n < 1 || n > orderBound()) throw IndexError("diffeomorphism coefficient index out of range");
  return coeffs_[static_cast<size_t>(n - 1)];
}

bool FormalDiffeo::isIdentity() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const LaurentSeries& c) { return c.isZero(); });
}

FormalDiffeo compose(const FormalDiffeo& outer, const FormalDiffeo& inner) {
  int bound = std::min(outer.orderBound(), inner.orderBound());
  int cap = 2 * bound + 1;
  GPoly v = toPoly(inner, bound);
  GPoly acc = v;  // the k = 0 term of outer(v) = v + sum_k a_k v^{2k+1}
  GPoly v2 = polyMul(v, v, cap);
  GPoly vpow = v;
  for (int k = 1; k <= bound; ++k) {
    vpow = polyMul(vpow, v2, cap);
    const LaurentSeries& ak = outer.coeff(k);
    if (ak.isZero()) continue;
    for (size_t i = 0; i < vpow.size(); ++i)
      if (!vpow[i].isZero()) acc[i] += ak * vpow[i];
  }
  std::vector<LaurentSeries> cs(static_cast<size_t>(bound));
  for (int n = 1; n <= bound; ++n) cs[static_cast<size_t>(n - 1)] = acc[static_cast<size_t>(2 * n + 1)];
  return FormalDiffeo(std::move(cs));
}

FormalDiffeo invertDiffeo(const FormalDiffeo& f) {
  int bound = f.orderBound();
  std::vector<LaurentSeries> cs(static_cast<size_t>(bound));
  for (int m = 1; m <= bound; ++m) {
    // Coefficient m of f(partial) depends linearly on c_m with unit slope.
    FormalDiffeo partial{std::vector<LaurentSeries>(cs)};
    cs[static_cast<size_t>(m - 1)] = -compose(f, partial).coeff(m);
  }
  return FormalDiffeo(std::move(cs));
}

DiffeoBirkhoff birkhoffDiffeo(const FormalDiffeo& loop) {
  int bound = loop.orderBound();
  std::vector<LaurentSeries> neg(static_cast<size_t>(bound));
  std::vector<LaurentSeries> pos(static_cast<size_t>(bound));
  for (int m = 1; m <= bound; ++m) {
    // Coefficient m of loop o neg is final once d_1..d_m are set.
    FormalDiffeo partial{std::vector<LaurentSeries>(neg)};
    LaurentSeries s = compose(loop, partial).coeff(m);
    neg[static_cast<size_t>(m - 1)] = -s.polePart();
    pos[static_cast<size_t>(m - 1)] = s.holoPart();
  }
  return DiffeoBirkhoff{FormalDiffeo(std::move(neg)), FormalDiffeo(std::move(pos))};
}

std::vector<ParamPoly> evalAtZero(const FormalDiffeo& f) {
  std::vector<ParamPoly> out;
  out.reserve(static_cast<size_t>(f.orderBound()));
  for (int n = 1; n <= f.orderBound(); ++n) out.push_back(f.coeff(n).constantTerm());
  return out;
}

int FdbHopfInstance::degreeOf(const GenKey& g) const {
  if (g.size() < 2 || g[0] != 'a' || g[1] == '0' || g.find_first_not_of("0123456789", 1) != std::string::npos)
    throw IndexError("unknown diffeomorphism coordinate '" + g + "'");
  return std::stoi(g.substr(1));
}

std::vector<GenKey> FdbHopfInstance::generatorsOfDegree(int d) const {
  if (d < 1) return {};
  return {"a" + std::to_string(d)};
}

std::vector<TensorTerm> FdbHopfInstance::reducedCoproduct(const GenKey& g) const {
  int n = degreeOf(g);
  std::vector<TensorTerm> out;
  for (int k = 1; k < n; ++k) {
    int placeCount = 2 * k + 1;
    // Multisets of positive parts summing to n - k, at most placeCount parts;
    // the coefficient counts the ordered placements into the 2k+1 factors.
    std::vector<int> parts;
    auto emit = [&]() {
      int r = static_cast<int>(parts.size());
      Rational c = factorial(placeCount) / factorial(placeCount - r);
      int run = 1;
      for (size_t i = 1; i <= parts.size(); ++i) {
        if (i < parts.size() && parts[i] == parts[i - 1]) {
          ++run;
        } else {
          c = c / factorial(run);
          run = 1;
        }
      }
      std::vector<GenKey> mono;
      mono.reserve(parts.size());
      for (int p : parts) mono.push_back("a" + std::to_string(p));
      out.push_back(TensorTerm{Monomial{"a" + std::to_string(k)}, makeMonomial(std::move(mono)), c});
    };
    std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
      if (remaining == 0) {
        emit();
        return;
      }
      if (static_cast<int>(parts.size()) == placeCount) return;
      for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        parts.push_back(p);
        rec(remaining - p, p);
        parts.pop_back();
      }
    };
    rec(n - k, n - k);
  }
  return out;
}

std::shared_ptr<const FdbHopfInstance> fdbInstance() {
  static std::shared_ptr<const FdbHopfInstance> inst = std::make_shared<FdbHopfInstance>();
  return inst;
}

Character characterOfDiffeo(const FormalDiffeo& f, int degreeBound) {
  if (degreeBound > f.orderBound())
    throw DomainError("diffeomorphism known only through order " + std::to_string(f.orderBound()));
  std::map<GenKey, LaurentSeries> values;
  for (int n = 1; n <= degreeBound; ++n) values.emplace("a" + std::to_string(n), f.coeff(n));
  return Character(fdbInstance(), std::move(values), degreeBound);
}

FormalDiffeo diffeoOfCharacter(const Character& f) {
  std::vector<LaurentSeries> cs(static_cast<size_t>(f.degreeBound()));
  for (int n = 1; n <= f.degreeBound(); ++n)
    cs[static_cast<size_t>(n - 1)] = f.genValue("a" + std::to_string(n));
  return FormalDiffeo(std::move(cs));
}

FormalDiffeo effectiveCouplingToy(const Character& treeChar, int loopBound) {
  if (loopBound < 0) throw DomainError("negative loop bound");
  // Polynomials in x = g^2, truncated above x^loopBound.
  size_t size = static_cast<size_t>(loopBound) + 1;
  std::vector<LaurentSeries> numer(size), denomDelta(size);
  numer[0] = LaurentSeries::constant(Rational(1));
  for (int l = 1; l <= loopBound; ++l) {
    numer[static_cast<size_t>(l)] = treeChar.genValue(RootedTree::chain(l).key());
    denomDelta[static_cast<size_t>(l)] = -treeChar.genValue(RootedTree::corolla(l).key());
  }
  // (1 + delta)^{-3/2} via the generalized binomial series.
  std::vector<LaurentSeries> invPow(size), deltaPow(size);
  invPow[0] = LaurentSeries::constant(Rational(1));
  deltaPow[0] = LaurentSeries::constant(Rational(1));
  Rational binom(1);
  for (int m = 1; m <= loopBound; ++m) {
    deltaPow = polyMul(deltaPow, denomDelta, loopBound);
    binom = binom * (Rational(-3, 2) - Rational(m - 1)) / Rational(m);
    for (size_t i = 0; i < size; ++i)
      if (!deltaPow[i].isZero()) invPow[i] += deltaPow[i].scaled(binom);
  }
  std::vector<LaurentSeries> total = polyMul(numer, invPow, loopBound);
  std::vector<LaurentSeries> cs(static_cast<size_t>(loopBound));
  for (int n = 1; n <= loopBound; ++n) cs[static_cast<size_t>(n - 1)] = total[static_cast<size_t>(n)];
  return FormalDiffeo(std::move(cs));
}

}  // namespace hopfren
