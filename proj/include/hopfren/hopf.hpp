#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfren/laurent.hpp"
#include "hopfren/parallel.hpp"
#include "hopfren/tree.hpp"

namespace hopfren {

// Generator of a graded connected Hopf algebra, identified by its canonical
// key string. A basis monomial is a sorted multiset of generator keys; the
// empty monomial is the unit.
using GenKey = std::string;
using Monomial = std::vector<GenKey>;

Monomial makeMonomial(std::vector<GenKey> gens);

struct TensorTerm {
  Monomial left;
  Monomial right;
  Rational coeff;
};

// Element of H (x) H as a coefficient map over monomial pairs.
using TensorElement = std::map<std::pair<Monomial, Monomial>, Rational>;
// Element of H as a coefficient map over monomials.
using Combination = std::map<Monomial, Rational>;

// A Hopf algebra presented by generators: grading, per-degree generator
// enumeration, and the reduced coproduct on generators (both tensor factors in
// the augmentation ideal). Monomial-level structure is derived here and
// memoized; caches are not synchronized, so warm them (prefetchDegree) before
// reading from parallel sections.
class HopfInstance {
 public:
  virtual ~HopfInstance() = default;
  virtual std::string name() const = 0;
  virtual int degreeOf(const GenKey& g) const = 0;
  virtual std::vector<GenKey> generatorsOfDegree(int d) const = 0;
  virtual std::vector<TensorTerm> reducedCoproduct(const GenKey& g) const = 0;

  std::vector<GenKey> generatorsUpTo(int d) const;
  int degreeOfMonomial(const Monomial& m) const;
  // All monomials of total degree 1..d plus the empty monomial.
  std::vector<Monomial> monomialsUpTo(int d) const;

  // Full coproduct of a monomial (multiplicative extension, trivial terms
  // included); memoized.
  const TensorElement& fullCoproduct(const Monomial& m) const;
  // Antipode of a monomial as a combination of monomials; memoized.
  const Combination& antipodeOf(const Monomial& m) const;

  // Warms the coproduct caches for every generator of degree <= d.
  void prefetchDegree(int d) const;

 private:
  mutable std::map<Monomial, TensorElement> cpMemo_;
  mutable std::map<Monomial, Combination> antipodeMemo_;
};

// Algebra morphism H -> Laurent series, determined by generator values and
// extended multiplicatively; immutable after construction.
class Character {
 public:
  Character(std::shared_ptr<const HopfInstance> inst, std::map<GenKey, LaurentSeries> genValues,
            int degreeBound);

  const HopfInstance& instance() const { return *inst_; }
  std::shared_ptr<const HopfInstance> instancePtr() const { return inst_; }
  int degreeBound() const { return bound_; }

  const LaurentSeries& genValue(const GenKey& g) const;  // IndexError if absent
  LaurentSeries value(const Monomial& m) const;          // product over generators

  const std::map<GenKey, LaurentSeries>& genValues() const { return values_; }

 private:
  std::shared_ptr<const HopfInstance> inst_;
  std::map<GenKey, LaurentSeries> values_;
  int bound_;
};

// Convolution unit: 1 on the empty monomial, 0 on generators.
Character counitCharacter(std::shared_ptr<const HopfInstance> inst, int degreeBound);

// Convolution product of characters (ContextError on instance mismatch).
Character convolve(const Character& f, const Character& g);

// Convolution inverse f^{-1} = f o S, computed degreewise.
Character inverseCharacter(const Character& f);

// Birkhoff splitting of a Laurent-valued character: negative part pure-pole
// normalized, positive part pole-free, f = negative^{-1} * positive.
struct BirkhoffPair {
  Character negative;
  Character positive;
};

BirkhoffPair birkhoff(const Character& f, Parallelism mode = Parallelism::Parallel);

// Preparation map: f(X) + sum over reduced coproduct of C(left) f(right).
LaurentSeries bphzPrepare(const Character& f, const Character& c, const GenKey& x);
// Counterterm character C(X) = -polePart(prepare(X)), recursive over
// subgraph depth (independent implementation of the same splitting).
Character bphzCounterterm(const Character& f);
// Renormalized character R(X) = prepare(X) + C(X).
Character bphzRenormalized(const Character& f, const Character& c);

// Hopf algebra of rooted trees: generators are trees, degree = vertex count,
// reduced coproduct from admissible cuts.
class TreeHopfInstance : public HopfInstance {
 public:
  std::string name() const override { return "trees"; }
  int degreeOf(const GenKey& g) const override;
  std::vector<GenKey> generatorsOfDegree(int d) const override;
  std::vector<TensorTerm> reducedCoproduct(const GenKey& g) const override;
};

std::shared_ptr<const TreeHopfInstance> treeInstance();

// Dimensional-regularization stand-in on trees:
//   value(t) = expScaled(|t|, scaleParam) * prod_v 1/(w(v) eps (1 - w(v) eps))
// where w(v) is the vertex count of the subtree at v.
Character toyTreeCharacter(std::shared_ptr<const HopfInstance> inst, int degreeBound,
                           int truncOrder = kDefaultOrder, Param scaleParam = Param::L);

// 1/(a eps (1 - a eps)) as a series with window [-1, trunc]; a > 0.
LaurentSeries toyPoleFactor(const Rational& a, int trunc);

}  // namespace hopfren
