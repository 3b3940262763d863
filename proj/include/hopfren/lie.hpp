#pragma once

#include <map>
#include <memory>

#include "hopfren/graph_hopf.hpp"
#include "hopfren/hopf.hpp"
#include "hopfren/tree.hpp"

namespace hopfren {

// Linear functional H -> LaurentSeries as a sparse table over basis
// monomials; absent entries are zero. Unlike a Character, no
// multiplicativity is implied.
using Functional = std::map<Monomial, LaurentSeries>;

// Derivation-like functional: vanishes on the unit and on all products,
// so it is determined by its values on single generators.
class InfinitesimalCharacter {
 public:
  InfinitesimalCharacter(std::shared_ptr<const HopfInstance> inst,
                         std::map<GenKey, LaurentSeries> genValues, int degreeBound);

  const HopfInstance& instance() const { return *inst_; }
  std::shared_ptr<const HopfInstance> instancePtr() const { return inst_; }
  int degreeBound() const { return bound_; }

  LaurentSeries genValue(const GenKey& g) const;  // zero when absent
  LaurentSeries value(const Monomial& m) const;   // zero on unit and products
  const std::map<GenKey, LaurentSeries>& genValues() const { return values_; }
  bool isZero() const;

 private:
  std::shared_ptr<const HopfInstance> inst_;
  std::map<GenKey, LaurentSeries> values_;
  int bound_;
};

// Functional-algebra helpers over one Hopf instance.
Functional counitFunctional(const HopfInstance& inst);
Functional characterFunctional(const Character& f);
Functional toFunctional(const InfinitesimalCharacter& z);
Functional addFunctionals(const Functional& a, const Functional& b);
Functional scaleFunctional(const Functional& a, const Rational& c);
// Convolution (a * b)(m) = sum over the full coproduct of a(left) b(right),
// for every monomial of degree <= bound.
Functional convolveFunctionals(const HopfInstance& inst, const Functional& a, const Functional& b,
                               int bound);
// Transpose of the grading biderivation: multiplies the value on a degree-n
// monomial by n. It is a derivation for the convolution product.
Functional functionalY(const HopfInstance& inst, const Functional& a);

// Commutator of infinitesimal characters under convolution. The commutator
// vanishes on products (unlike the individual convolutions), so the result
// is again infinitesimal; commutatorFunctional exposes the full table for
// tests of that fact.
Functional commutatorFunctional(const InfinitesimalCharacter& z1,
                                const InfinitesimalCharacter& z2);
InfinitesimalCharacter bracket(const InfinitesimalCharacter& z1,
                               const InfinitesimalCharacter& z2);

// Grafting bracket on rooted trees:
//   [t1, t2] = sum_{v in t1} graft(t1, t2, v) - sum_{v in t2} graft(t2, t1, v).
std::map<RootedTree, Rational> treeBracket(const RootedTree& t1, const RootedTree& t2);
std::map<RootedTree, Rational> treeBracket(const std::map<RootedTree, Rational>& x,
                                           const std::map<RootedTree, Rational>& y);

// Multiplies the degree-n component by n.
InfinitesimalCharacter gradingY(const InfinitesimalCharacter& z);

// One-parameter scaling automorphism: on a degree-n generator the value is
// multiplied by exp(n * scale * eps), truncated so the result window reaches
// at least truncTarget.
Character theta(const Character& f, const ParamPoly& scale, int truncTarget = kDefaultOrder);

// Convolution exponential sum Z^{*k}/k! (finite degreewise) and its inverse.
Character expCharacter(const InfinitesimalCharacter& z);
Functional expCharacterFunctional(const InfinitesimalCharacter& z);
InfinitesimalCharacter logCharacter(const Character& f);
Functional logCharacterFunctional(const Character& f);

// Insertion bracket on graph generators: signed subgraph-counting sum over
// insertion candidates. Throws UnsupportedInsertionError when a surviving
// term lies outside the instance's catalog closure.
std::map<GenKey, Rational> graphBracket(const GraphHopfInstance& inst, const GenKey& g1,
                                        const GenKey& g2);

// Candidate graphs obtainable by inserting `inner` (with the given marker)
// into `outer`: at edge-correction vertices of the matching kind for 2-point
// inner graphs, at plain vertices for 3-point ones. Canonical, deduplicated.
std::vector<FeynGraph> insertionCandidates(const FeynGraph& inner, int marker,
                                           const FeynGraph& outer);

// Number of single-component admissible subsets of `whole` isomorphic to
// `part` whose quotient with the given marker is isomorphic to `rest`.
int insertionCount(const FeynGraph& whole, const FeynGraph& part, int marker,
                   const FeynGraph& rest);

}  // namespace hopfren
