#include "hopfren/lie.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hopfren/errors.hpp"

namespace hopfren {

namespace {

const LaurentSeries& zeroSeries() {
  static const LaurentSeries z;
  return z;
}

const LaurentSeries& lookup(const Functional& f, const Monomial& m) {
  auto it = f.find(m);
  return it == f.end() ? zeroSeries() : it->second;
}

void addEntry(Functional& f, const Monomial& m, const LaurentSeries& v) {
  if (v.isZero()) return;
  auto [it, fresh] = f.emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (it->second.isZero()) f.erase(it);
  }
}

// exp(k * p * eps) with polynomial p, truncated at eps^trunc.
LaurentSeries expPolyEps(const ParamPoly& p, int k, int trunc) {
  if (k == 0 || p.isZero()) return LaurentSeries::constant(Rational(1));
  if (trunc >= kExactOrder) throw TruncationError("exponential needs a finite window");
  if (trunc < 0) return LaurentSeries::zero(trunc);
  ParamPoly step = p.scaled(Rational(k));
  std::vector<ParamPoly> coeffs(static_cast<size_t>(trunc) + 1);
  ParamPoly pw(Rational(1));
  Rational fact(1);
  for (int m = 0; m <= trunc; ++m) {
    if (m > 0) {
      pw *= step;
      fact = fact * Rational(m);
    }
    coeffs[static_cast<size_t>(m)] = pw.scaled(fact.inverse());
  }
  return LaurentSeries::fromCoeffs(0, std::move(coeffs), trunc);
}

}  // namespace

InfinitesimalCharacter::InfinitesimalCharacter(std::shared_ptr<const HopfInstance> inst,
                                               std::map<GenKey, LaurentSeries> genValues,
                                               int degreeBound)
    : inst_(std::move(inst)), values_(std::move(genValues)), bound_(degreeBound) {
  if (!inst_) throw ContextError("infinitesimal character needs an instance");
  for (auto it = values_.begin(); it != values_.end();) {
    if (it->second.isZero())
      it = values_.erase(it);
    else
      ++it;
  }
}

LaurentSeries InfinitesimalCharacter::genValue(const GenKey& g) const {
  auto it = values_.find(g);
  return it == values_.end() ? LaurentSeries() : it->second;
}

LaurentSeries InfinitesimalCharacter::value(const Monomial& m) const {
  if (m.size() != 1) return LaurentSeries();
  return genValue(m.front());
}

bool InfinitesimalCharacter::isZero() const { return values_.empty(); }

Functional counitFunctional(const HopfInstance&) {
  Functional f;
  f.emplace(Monomial{}, LaurentSeries::constant(Rational(1)));
  return f;
}

Functional characterFunctional(const Character& f) {
  Functional out;
  for (const Monomial& m : f.instance().monomialsUpTo(f.degreeBound()))
    addEntry(out, m, f.value(m));
  return out;
}

Functional toFunctional(const InfinitesimalCharacter& z) {
  Functional out;
  for (const auto& [g, v] : z.genValues()) addEntry(out, Monomial{g}, v);
  return out;
}

Functional addFunctionals(const Functional& a, const Functional& b) {
  Functional out = a;
  for (const auto& [m, v] : b) addEntry(out, m, v);
  return out;
}

Functional scaleFunctional(const Functional& a, const Rational& c) {
  Functional out;
  if (c.isZero()) return out;
  for (const auto& [m, v] : a) out.emplace(m, v.scaled(c));
  return out;
}

Functional convolveFunctionals(const HopfInstance& inst, const Functional& a, const Functional& b,
                               int bound) {
  Functional out;
  for (const Monomial& m : inst.monomialsUpTo(bound)) {
    LaurentSeries v;
    for (const auto& [lr, c] : inst.fullCoproduct(m)) {
      const LaurentSeries& av = lookup(a, lr.first);
      if (av.isZero()) continue;
      const LaurentSeries& bv = lookup(b, lr.second);
      if (bv.isZero()) continue;
      v += (av * bv).scaled(c);
    }
    addEntry(out, m, v);
  }
  return out;
}

Functional functionalY(const HopfInstance& inst, const Functional& a) {
  Functional out;
  for (const auto& [m, v] : a) {
    int d = inst.degreeOfMonomial(m);
    if (d > 0) out.emplace(m, v.scaled(Rational(d)));
  }
  return out;
}

Functional commutatorFunctional(const InfinitesimalCharacter& z1,
                                const InfinitesimalCharacter& z2) {
  if (z1.instancePtr().get() != z2.instancePtr().get())
    throw ContextError("bracket of characters over different instances");
  int bound = std::min(z1.degreeBound(), z2.degreeBound());
  const HopfInstance& inst = z1.instance();
  Functional a = toFunctional(z1);
  Functional b = toFunctional(z2);
  return addFunctionals(convolveFunctionals(inst, a, b, bound),
                        scaleFunctional(convolveFunctionals(inst, b, a, bound), Rational(-1)));
}

InfinitesimalCharacter bracket(const InfinitesimalCharacter& z1,
                               const InfinitesimalCharacter& z2) {
  Functional comm = commutatorFunctional(z1, z2);
  std::map<GenKey, LaurentSeries> values;
  for (const auto& [m, v] : comm)
    if (m.size() == 1) values.emplace(m.front(), v);
  return InfinitesimalCharacter(z1.instancePtr(), std::move(values),
                                std::min(z1.degreeBound(), z2.degreeBound()));
}

std::map<RootedTree, Rational> treeBracket(const RootedTree& t1, const RootedTree& t2) {
  std::map<RootedTree, Rational> out;
  auto add = [&out](const RootedTree& t, int c) {
    auto [it, fresh] = out.emplace(t, Rational(c));
    if (!fresh) {
      it->second = it->second + Rational(c);
      if (it->second.isZero()) out.erase(it);
    }
  };
  for (int v = 0; v < t1.vertexCount(); ++v) add(graft(t1, t2, v), 1);
  for (int v = 0; v < t2.vertexCount(); ++v) add(graft(t2, t1, v), -1);
  return out;
}

std::map<RootedTree, Rational> treeBracket(const std::map<RootedTree, Rational>& x,
                                           const std::map<RootedTree, Rational>& y) {
  std::map<RootedTree, Rational> out;
  for (const auto& [t1, c1] : x)
    for (const auto& [t2, c2] : y)
      for (const auto& [t, c] : treeBracket(t1, t2)) {
        auto [it, fresh] = out.emplace(t, c * c1 * c2);
        if (!fresh) {
          it->second = it->second + c * c1 * c2;
          if (it->second.isZero()) out.erase(it);
        }
      }
  return out;
}

InfinitesimalCharacter gradingY(const InfinitesimalCharacter& z) {
  std::map<GenKey, LaurentSeries> values;
  for (const auto& [g, v] : z.genValues())
    values.emplace(g, v.scaled(Rational(z.instance().degreeOf(g))));
  return InfinitesimalCharacter(z.instancePtr(), std::move(values), z.degreeBound());
}

Character theta(const Character& f, const ParamPoly& scale, int truncTarget) {
  std::map<GenKey, LaurentSeries> values;
  for (const auto& [g, v] : f.genValues()) {
    if (v.isZero()) {
      values.emplace(g, v);
      continue;
    }
    int n = f.instance().degreeOf(g);
    int expTrunc = std::max(0, truncTarget - v.minDegree());
    values.emplace(g, v * expPolyEps(scale, n, expTrunc));
  }
  return Character(f.instancePtr(), std::move(values), f.degreeBound());
}

Functional expCharacterFunctional(const InfinitesimalCharacter& z) {
  const HopfInstance& inst = z.instance();
  int bound = z.degreeBound();
  Functional zf = toFunctional(z);
  Functional acc = counitFunctional(inst);
  Functional pw = counitFunctional(inst);
  for (int k = 1; k <= bound; ++k) {
    pw = scaleFunctional(convolveFunctionals(inst, pw, zf, bound), Rational(1, k));
    if (pw.empty()) break;
    acc = addFunctionals(acc, pw);
  }
  return acc;
}

Character expCharacter(const InfinitesimalCharacter& z) {
  Functional acc = expCharacterFunctional(z);
  std::map<GenKey, LaurentSeries> values;
  for (const GenKey& g : z.instance().generatorsUpTo(z.degreeBound()))
    values.emplace(g, lookup(acc, Monomial{g}));
  return Character(z.instancePtr(), std::move(values), z.degreeBound());
}

Functional logCharacterFunctional(const Character& f) {
  const HopfInstance& inst = f.instance();
  int bound = f.degreeBound();
  Functional u = characterFunctional(f);
  u.erase(Monomial{});  // f - counit
  Functional acc;
  Functional pw = counitFunctional(inst);
  Rational sign(1);
  for (int k = 1; k <= bound; ++k) {
    pw = convolveFunctionals(inst, pw, u, bound);
    if (pw.empty()) break;
    acc = addFunctionals(acc, scaleFunctional(pw, sign * Rational(1, k)));
    sign = -sign;
  }
  return acc;
}

InfinitesimalCharacter logCharacter(const Character& f) {
  Functional acc = logCharacterFunctional(f);
  std::map<GenKey, LaurentSeries> values;
  for (const auto& [m, v] : acc)
    if (m.size() == 1) values.emplace(m.front(), v);
  return InfinitesimalCharacter(f.instancePtr(), std::move(values), f.degreeBound());
}

std::vector<FeynGraph> insertionCandidates(const FeynGraph& inner, int marker,
                                           const FeynGraph& outer) {
  int k = inner.externalCount();
  std::vector<FeynGraph> out;
  if (k != 2 && k != 3) return out;  // no matching vertex valence exists
  VertexType slotType = k == 3 ? VertexType::V3 : (marker == 1 ? VertexType::V2S1 : VertexType::V2S0);

  // Leg slots of the inner graph, one entry per leg.
  std::vector<int> slots;
  for (int v = 0; v < inner.vertexCount(); ++v)
    for (int c = 0; c < inner.legsAt(v); ++c) slots.push_back(v);

  std::vector<std::string> seen;
  for (int m = 0; m < outer.vertexCount(); ++m) {
    if (outer.typeOf(m) != slotType) continue;
    // Incidences of m: neighbor vertex index per edge end, -1 per external leg.
    std::vector<int> inc;
    for (const auto& [a, b] : outer.edges()) {
      if (a == m) inc.push_back(b);
      if (b == m) inc.push_back(a);
    }
    for (int c = 0; c < outer.legsAt(m); ++c) inc.push_back(-1);

    // Vertex relabeling: outer vertices except m first, inner appended.
    std::vector<int> outerMap(outer.vertexCount(), -1);
    int next = 0;
    for (int v = 0; v < outer.vertexCount(); ++v)
      if (v != m) outerMap[v] = next++;
    int innerBase = next;

    std::vector<int> perm(slots.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<VertexType> types;
      std::vector<std::pair<int, int>> edges;
      std::vector<int> legs;
      for (int v = 0; v < outer.vertexCount(); ++v)
        if (v != m) {
          types.push_back(outer.typeOf(v));
          legs.push_back(outer.legsAt(v));
        }
      for (int v = 0; v < inner.vertexCount(); ++v) {
        types.push_back(inner.typeOf(v));
        legs.push_back(0);
      }
      for (const auto& [a, b] : outer.edges())
        if (a != m && b != m) edges.emplace_back(outerMap[a], outerMap[b]);
      for (const auto& [a, b] : inner.edges()) edges.emplace_back(innerBase + a, innerBase + b);
      for (size_t j = 0; j < inc.size(); ++j) {
        int at = innerBase + slots[static_cast<size_t>(perm[j])];
        if (inc[j] == -1)
          ++legs[static_cast<size_t>(at)];
        else
          edges.emplace_back(outerMap[static_cast<size_t>(inc[j])], at);
      }
      FeynGraph cand = FeynGraph(std::move(types), std::move(edges), std::move(legs)).canonical();
      std::string key = cand.canonicalKey();
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        out.push_back(std::move(cand));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

int insertionCount(const FeynGraph& whole, const FeynGraph& part, int marker,
                   const FeynGraph& rest) {
  int n = 0;
  for (const std::vector<int>& sub : divergentSubgraphs(whole)) {
    if (componentsOf(whole, sub).size() != 1) continue;
    if (!componentGraph(whole, sub).isomorphicTo(part)) continue;
    if (quotientGraph(whole, sub, {marker}).isomorphicTo(rest)) ++n;
  }
  return n;
}

std::map<GenKey, Rational> graphBracket(const GraphHopfInstance& inst, const GenKey& g1,
                                        const GenKey& g2) {
  const GraphGenInfo& i1 = inst.info(g1);
  const GraphGenInfo& i2 = inst.info(g2);

  std::map<std::pair<std::string, int>, Rational> acc;
  std::map<std::string, FeynGraph> reps;
  auto addSide = [&](const GraphGenInfo& part, const GraphGenInfo& host, int sign) {
    for (const FeynGraph& cand : insertionCandidates(part.graph, part.marker, host.graph)) {
      int n = insertionCount(cand, part.graph, part.marker, host.graph);
      if (n == 0) continue;
      std::string ck = cand.canonicalKey();
      reps.emplace(ck, cand);
      auto [it, fresh] = acc.emplace(std::make_pair(ck, host.marker), Rational(sign * n));
      if (!fresh) it->second = it->second + Rational(sign * n);
    }
  };
  addSide(i1, i2, 1);
  addSide(i2, i1, -1);

  std::map<GenKey, Rational> out;
  for (const auto& [km, c] : acc) {
    if (c.isZero()) continue;  // cancellations never touch the catalog
    GenKey k = inst.findGenerator(reps.at(km.first), km.second);
    if (k.empty())
      throw UnsupportedInsertionError("bracket of " + inst.displayName(g1) + " and " +
                                      inst.displayName(g2) +
                                      " leaves the catalog closure (term " + km.first + ")");
    auto [it, fresh] = out.emplace(k, c);
    if (!fresh) it->second = it->second + c;
  }
  return out;
}

}  // namespace hopfren
