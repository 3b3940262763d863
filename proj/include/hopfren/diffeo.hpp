#pragma once

#include <memory>
#include <vector>

#include "hopfren/hopf.hpp"

namespace hopfren {

// Formal odd diffeomorphism tangent to the identity,
//   f(g) = g + sum_{n=1..N} a_n g^{2n+1},
// with Laurent-series coefficients, known through g^{2N+1}. Immutable.
class FormalDiffeo {
 public:
  explicit FormalDiffeo(std::vector<LaurentSeries> oddCoeffs);
  static FormalDiffeo identity(int orderBound);
  static FormalDiffeo fromRationals(const std::vector<Rational>& coeffs);

  int orderBound() const { return static_cast<int>(coeffs_.size()); }  // N
  const LaurentSeries& coeff(int n) const;  // a_n, 1-based; IndexError
  const std::vector<LaurentSeries>& coeffs() const { return coeffs_; }
  bool isIdentity() const;

  friend bool operator==(const FormalDiffeo& a, const FormalDiffeo& b) = default;

 private:
  std::vector<LaurentSeries> coeffs_;
};

// outer(inner(g)) through the smaller of the two order bounds.
FormalDiffeo compose(const FormalDiffeo& outer, const FormalDiffeo& inner);

// Compositional inverse, degree by degree.
FormalDiffeo invertDiffeo(const FormalDiffeo& f);

// Splitting of a diffeomorphism-valued loop in the opposed-composition
// convention: loop = positive o negative^{-1}, where every negative-part
// coefficient is a pure pole and every positive-part coefficient is
// pole-free. The pair with these normalizations is unique.
struct DiffeoBirkhoff {
  FormalDiffeo negative;
  FormalDiffeo positive;
};

DiffeoBirkhoff birkhoffDiffeo(const FormalDiffeo& loop);

// Coefficient polynomials at eps = 0; PoleError when a pole remains.
std::vector<ParamPoly> evalAtZero(const FormalDiffeo& f);

// Hopf algebra of coordinates a_n on the group of odd formal
// diffeomorphisms: the coproduct is dual to composition, so that evaluation
// characters satisfy (psi_u * psi_v)(a_n) = a_n(u o v) with the outer map on
// the left tensor factor.
class FdbHopfInstance : public HopfInstance {
 public:
  std::string name() const override { return "diffeo"; }
  int degreeOf(const GenKey& g) const override;
  std::vector<GenKey> generatorsOfDegree(int d) const override;
  std::vector<TensorTerm> reducedCoproduct(const GenKey& g) const override;
};

std::shared_ptr<const FdbHopfInstance> fdbInstance();

// Evaluation character psi_f: a_n -> coeff(n). Requires degreeBound <= N.
Character characterOfDiffeo(const FormalDiffeo& f, int degreeBound);
// Inverse direction: reads a_1..a_bound off a character.
FormalDiffeo diffeoOfCharacter(const Character& f);

// Toy effective coupling built from a tree-level character:
//   g_eff = g (1 + sum_l f(chain_l) g^{2l}) (1 - sum_l f(corolla_l) g^{2l})^{-3/2},
// where chain_l / corolla_l are the l-vertex chain and corolla trees.
FormalDiffeo effectiveCouplingToy(const Character& treeChar, int loopBound);

}  // namespace hopfren
