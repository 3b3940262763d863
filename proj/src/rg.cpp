#include "hopfren/rg.hpp"

#include <algorithm>
#include <functional>

#include "hopfren/errors.hpp"

namespace hopfren {

int scaleDependence(const Character& f, Param p) {
  int w = 0;
  for (const auto& [g, v] : f.genValues()) w = std::max(w, v.maxDegreeIn(p));
  return w;
}

InfinitesimalCharacter residue(const Character& negative) {
  std::map<GenKey, LaurentSeries> values;
  for (const auto& [g, v] : negative.genValues()) {
    if (v.isZero()) continue;
    ParamPoly c = v.coeff(-1);
    if (!c.isZero()) values.emplace(g, LaurentSeries::constant(-c));
  }
  return InfinitesimalCharacter(negative.instancePtr(), std::move(values),
                                negative.degreeBound());
}

InfinitesimalCharacter betaFunction(const Character& negative) {
  return gradingY(residue(negative));
}

Character flowFamily(const Character& negative, Param flowParam, int truncTarget) {
  Character inv = inverseCharacter(negative);
  Character moved = theta(inv, ParamPoly::variable(flowParam), truncTarget);
  Character h = convolve(negative, moved);
  std::map<GenKey, LaurentSeries> values;
  for (const auto& [g, v] : h.genValues()) {
    if (v.hasPole())
      throw LocalityError("pole survives the flow limit on generator " + g +
                          ": negative part is scale-dependent");
    values.emplace(g, LaurentSeries::constant(v.constantTerm()));
  }
  return Character(negative.instancePtr(), std::move(values), negative.degreeBound());
}

Character gammaMinusFromBeta(const InfinitesimalCharacter& beta, int degreeBound) {
  std::shared_ptr<const HopfInstance> inst = beta.instancePtr();
  std::map<Monomial, LaurentSeries> memo;
  std::function<LaurentSeries(const Monomial&)> gamma = [&](const Monomial& m) -> LaurentSeries {
    if (m.empty()) return LaurentSeries::constant(Rational(1));
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int n = inst->degreeOfMonomial(m);
    LaurentSeries acc;
    for (const auto& [lr, c] : inst->fullCoproduct(m)) {
      if (lr.first.size() != 1) continue;
      LaurentSeries bv = beta.genValue(lr.first.front());
      if (bv.isZero()) continue;
      acc += (bv * gamma(lr.second)).scaled(c);
    }
    LaurentSeries out = acc.shifted(-1).scaled(Rational(-1, n));
    memo.emplace(m, out);
    return out;
  };
  std::map<GenKey, LaurentSeries> values;
  for (const GenKey& g : inst->generatorsUpTo(degreeBound)) values.emplace(g, gamma(Monomial{g}));
  return Character(inst, std::move(values), degreeBound);
}

RGReport rgReport(const Character& f, Parallelism mode) {
  BirkhoffPair pair = birkhoff(f, mode);
  RGReport rep{scaleDependence(pair.negative),
               residue(pair.negative),
               betaFunction(pair.negative),
               pair.negative,
               flowFamily(pair.negative),
               gammaMinusFromBeta(betaFunction(pair.negative), f.degreeBound()),
               true};
  for (const auto& [g, v] : rep.negative.genValues())
    if (!(rep.negativeFromBeta.genValue(g) == v)) rep.reconstructionMatches = false;
  return rep;
}

}  // namespace hopfren
