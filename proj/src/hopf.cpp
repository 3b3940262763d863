#include "hopfren/hopf.hpp"

#include <algorithm>

#include "hopfren/errors.hpp"

namespace hopfren {

Monomial makeMonomial(std::vector<GenKey> gens) {
  std::sort(gens.begin(), gens.end());
  return gens;
}

std::vector<GenKey> HopfInstance::generatorsUpTo(int d) const {
  std::vector<GenKey> out;
  for (int k = 1; k <= d; ++k) {
    auto gk = generatorsOfDegree(k);
    out.insert(out.end(), gk.begin(), gk.end());
  }
  return out;
}

int HopfInstance::degreeOfMonomial(const Monomial& m) const {
  int d = 0;
  for (const auto& g : m) d += degreeOf(g);
  return d;
}

std::vector<Monomial> HopfInstance::monomialsUpTo(int d) const {
  std::vector<GenKey> gens = generatorsUpTo(d);
  std::stable_sort(gens.begin(), gens.end(), [&](const GenKey& a, const GenKey& b) {
    int da = degreeOf(a), db = degreeOf(b);
    if (da != db) return da < db;
    return a < b;
  });
  std::vector<Monomial> out = {Monomial{}};
  std::vector<GenKey> current;
  // Non-increasing index sequences over the sorted pool enumerate multisets once.
  auto rec = [&](auto&& self, int remaining, std::size_t maxIdx) -> void {
    for (std::size_t i = 0; i < maxIdx; ++i) {
      int dg = degreeOf(gens[i]);
      if (dg > remaining) break;
      current.push_back(gens[i]);
      out.push_back(makeMonomial(current));
      self(self, remaining - dg, i + 1);
      current.pop_back();
    }
  };
  rec(rec, d, gens.size());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    int da = degreeOfMonomial(a), db = degreeOfMonomial(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

namespace {

void addTensor(TensorElement& acc, const Monomial& l, const Monomial& r, const Rational& c) {
  if (c.isZero()) return;
  auto key = std::make_pair(l, r);
  auto [it, inserted] = acc.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

Monomial mergeMonomials(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

void addCombo(Combination& acc, const Monomial& m, const Rational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = acc.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

Combination multiplyCombos(const Combination& a, const Combination& b) {
  Combination out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) addCombo(out, mergeMonomials(ma, mb), ca * cb);
  return out;
}

}  // namespace

const TensorElement& HopfInstance::fullCoproduct(const Monomial& m) const {
  auto it = cpMemo_.find(m);
  if (it != cpMemo_.end()) return it->second;
  TensorElement result;
  if (m.empty()) {
    result[{Monomial{}, Monomial{}}] = Rational(1);
  } else if (m.size() == 1) {
    const GenKey& g = m.front();
    result[{Monomial{g}, Monomial{}}] = Rational(1);
    addTensor(result, Monomial{}, Monomial{g}, Rational(1));
    for (const auto& t : reducedCoproduct(g)) addTensor(result, t.left, t.right, t.coeff);
  } else {
    // Product of the single-generator coproducts.
    result[{Monomial{}, Monomial{}}] = Rational(1);
    for (const auto& g : m) {
      const TensorElement& factor = fullCoproduct(Monomial{g});
      TensorElement next;
      for (const auto& [pa, ca] : result)
        for (const auto& [pf, cf] : factor)
          addTensor(next, mergeMonomials(pa.first, pf.first),
                    mergeMonomials(pa.second, pf.second), ca * cf);
      result = std::move(next);
    }
  }
  return cpMemo_.emplace(m, std::move(result)).first->second;
}

const Combination& HopfInstance::antipodeOf(const Monomial& m) const {
  auto it = antipodeMemo_.find(m);
  if (it != antipodeMemo_.end()) return it->second;
  Combination result;
  if (m.empty()) {
    result[Monomial{}] = Rational(1);
  } else if (m.size() == 1) {
    const GenKey& g = m.front();
    addCombo(result, Monomial{g}, Rational(-1));
    for (const auto& t : reducedCoproduct(g)) {
      const Combination& sLeft = antipodeOf(t.left);
      for (const auto& [ml, cl] : sLeft)
        addCombo(result, mergeMonomials(ml, t.right), -(cl * t.coeff));
    }
  } else {
    // S is an algebra morphism on a commutative Hopf algebra.
    result[Monomial{}] = Rational(1);
    for (const auto& g : m) result = multiplyCombos(result, antipodeOf(Monomial{g}));
  }
  return antipodeMemo_.emplace(m, std::move(result)).first->second;
}

void HopfInstance::prefetchDegree(int d) const {
  for (const auto& g : generatorsUpTo(d)) fullCoproduct(Monomial{g});
}

Character::Character(std::shared_ptr<const HopfInstance> inst,
                     std::map<GenKey, LaurentSeries> genValues, int degreeBound)
    : inst_(std::move(inst)), values_(std::move(genValues)), bound_(degreeBound) {}

const LaurentSeries& Character::genValue(const GenKey& g) const {
  auto it = values_.find(g);
  if (it == values_.end())
    throw IndexError("character has no value for generator '" + g + "' (degree bound " +
                     std::to_string(bound_) + ")");
  return it->second;
}

LaurentSeries Character::value(const Monomial& m) const {
  LaurentSeries v = LaurentSeries::constant(Rational(1));
  for (const auto& g : m) v *= genValue(g);
  return v;
}

Character counitCharacter(std::shared_ptr<const HopfInstance> inst, int degreeBound) {
  std::map<GenKey, LaurentSeries> values;
  for (const auto& g : inst->generatorsUpTo(degreeBound)) values[g] = LaurentSeries::zero();
  return Character(std::move(inst), std::move(values), degreeBound);
}

Character convolve(const Character& f, const Character& g) {
  if (&f.instance() != &g.instance())
    throw ContextError("convolution of characters over different Hopf instances");
  int bound = std::min(f.degreeBound(), g.degreeBound());
  const HopfInstance& inst = f.instance();
  std::map<GenKey, LaurentSeries> values;
  for (const auto& x : inst.generatorsUpTo(bound)) {
    LaurentSeries v = f.genValue(x) + g.genValue(x);
    for (const auto& t : inst.reducedCoproduct(x))
      v += (f.value(t.left) * g.value(t.right)).scaled(t.coeff);
    values[x] = std::move(v);
  }
  return Character(f.instancePtr(), std::move(values), bound);
}

Character inverseCharacter(const Character& f) {
  const HopfInstance& inst = f.instance();
  int bound = f.degreeBound();
  std::map<GenKey, LaurentSeries> inv;
  for (int d = 1; d <= bound; ++d) {
    for (const auto& x : inst.generatorsOfDegree(d)) {
      LaurentSeries v = -f.genValue(x);
      for (const auto& t : inst.reducedCoproduct(x)) {
        LaurentSeries lhs = LaurentSeries::constant(Rational(1));
        for (const auto& g : t.left) lhs *= inv.at(g);
        v -= (lhs * f.value(t.right)).scaled(t.coeff);
      }
      inv[x] = std::move(v);
    }
  }
  return Character(f.instancePtr(), std::move(inv), bound);
}

BirkhoffPair birkhoff(const Character& f, Parallelism mode) {
  const HopfInstance& inst = f.instance();
  int bound = f.degreeBound();
  std::map<GenKey, LaurentSeries> neg, pos;
  for (int d = 1; d <= bound; ++d) {
    std::vector<GenKey> gens = inst.generatorsOfDegree(d);
    // Snapshot coproducts serially: instance caches are not synchronized.
    std::vector<std::vector<TensorTerm>> cps;
    cps.reserve(gens.size());
    for (const auto& g : gens) cps.push_back(inst.reducedCoproduct(g));
    std::vector<LaurentSeries> negSlot(gens.size()), posSlot(gens.size());
    par::forEach(gens.size(), mode, [&](std::size_t i) {
      LaurentSeries bar = f.genValue(gens[i]);
      for (const auto& t : cps[i]) {
        LaurentSeries lhs = LaurentSeries::constant(Rational(1));
        for (const auto& g : t.left) lhs *= neg.at(g);
        bar += (lhs * f.value(t.right)).scaled(t.coeff);
      }
      negSlot[i] = -bar.polePart();
      posSlot[i] = bar + negSlot[i];
    });
    for (std::size_t i = 0; i < gens.size(); ++i) {
      neg[gens[i]] = std::move(negSlot[i]);
      pos[gens[i]] = std::move(posSlot[i]);
    }
  }
  return BirkhoffPair{Character(f.instancePtr(), std::move(neg), bound),
                      Character(f.instancePtr(), std::move(pos), bound)};
}

LaurentSeries bphzPrepare(const Character& f, const Character& c, const GenKey& x) {
  if (&f.instance() != &c.instance())
    throw ContextError("preparation map needs characters over one Hopf instance");
  LaurentSeries bar = f.genValue(x);
  for (const auto& t : f.instance().reducedCoproduct(x))
    bar += (c.value(t.left) * f.value(t.right)).scaled(t.coeff);
  return bar;
}

namespace {

// Counterterm recursion, memoized over nesting depth: C(X) is demanded for
// every generator inside X's reduced coproduct before X itself resolves.
const LaurentSeries& countertermValue(const Character& f, const GenKey& x,
                                      std::map<GenKey, LaurentSeries>& memo) {
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  LaurentSeries bar = f.genValue(x);
  for (const auto& t : f.instance().reducedCoproduct(x)) {
    LaurentSeries cl = LaurentSeries::constant(Rational(1));
    for (const auto& g : t.left) cl = cl * countertermValue(f, g, memo);
    bar += (cl * f.value(t.right)).scaled(t.coeff);
  }
  return memo.emplace(x, -bar.polePart()).first->second;
}

}  // namespace

Character bphzCounterterm(const Character& f) {
  std::map<GenKey, LaurentSeries> memo;
  for (const auto& x : f.instance().generatorsUpTo(f.degreeBound()))
    countertermValue(f, x, memo);
  return Character(f.instancePtr(), std::move(memo), f.degreeBound());
}

Character bphzRenormalized(const Character& f, const Character& c) {
  std::map<GenKey, LaurentSeries> values;
  for (const auto& x : f.instance().generatorsUpTo(f.degreeBound()))
    values[x] = bphzPrepare(f, c, x) + c.genValue(x);
  return Character(f.instancePtr(), std::move(values), f.degreeBound());
}

int TreeHopfInstance::degreeOf(const GenKey& g) const { return parseTree(g).vertexCount(); }

std::vector<GenKey> TreeHopfInstance::generatorsOfDegree(int d) const {
  std::vector<GenKey> out;
  for (const auto& t : treesOfDegree(d)) out.push_back(t.key());
  return out;
}

std::vector<TensorTerm> TreeHopfInstance::reducedCoproduct(const GenKey& g) const {
  RootedTree t = parseTree(g);
  std::vector<TensorTerm> out;
  for (const auto& [pair, c] : coproduct(t)) {
    const auto& [left, right] = pair;
    if (right.empty() || left.empty()) continue;  // trivial terms
    Monomial lm, rm;
    for (const auto& tr : left.trees()) lm.push_back(tr.key());
    for (const auto& tr : right.trees()) rm.push_back(tr.key());
    out.push_back({makeMonomial(std::move(lm)), makeMonomial(std::move(rm)), c});
  }
  return out;
}

std::shared_ptr<const TreeHopfInstance> treeInstance() {
  static auto inst = std::make_shared<const TreeHopfInstance>();
  return inst;
}

LaurentSeries toyPoleFactor(const Rational& a, int trunc) {
  if (!(a > Rational(0))) throw DomainError("toy pole factor needs a positive scale");
  if (trunc < -1) throw TruncationError("toy pole factor needs window >= -1");
  if (trunc >= kExactOrder) throw TruncationError("toy pole factor is an infinite series");
  // 1/(a eps (1 - a eps)) = (1/a)/eps + sum_{j>=0} a^j eps^j.
  std::vector<ParamPoly> coeffs;
  coeffs.push_back(ParamPoly(a.inverse()));
  Rational p(1);
  for (int j = 0; j <= trunc; ++j) {
    coeffs.push_back(ParamPoly(p));
    p *= a;
  }
  return LaurentSeries::fromCoeffs(-1, std::move(coeffs), trunc);
}

Character toyTreeCharacter(std::shared_ptr<const HopfInstance> inst, int degreeBound,
                           int truncOrder, Param scaleParam) {
  std::map<GenKey, LaurentSeries> values;
  for (const auto& g : inst->generatorsUpTo(degreeBound)) {
    RootedTree t = parseTree(g);
    LaurentSeries v = LaurentSeries::expScaled(t.vertexCount(), scaleParam, truncOrder);
    for (int w : t.subtreeWeights()) v *= toyPoleFactor(Rational(w), truncOrder);
    if (v.truncationOrder() < 0)
      throw TruncationError("truncation window too small for the pole depth of " + g);
    values[g] = std::move(v);
  }
  return Character(std::move(inst), std::move(values), degreeBound);
}

}  // namespace hopfren
