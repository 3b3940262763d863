#pragma once

#include "hopfren/hopf.hpp"
#include "hopfren/lie.hpp"

namespace hopfren {

// Largest power of the scale parameter appearing in any value of the
// character; 0 means scale-independent (the locality property of the
// negative Birkhoff part).
int scaleDependence(const Character& f, Param p = Param::L);

// Residue functional: minus the simple-pole coefficient of the negative part.
InfinitesimalCharacter residue(const Character& negative);

// Beta functional: grading operator applied to the residue.
InfinitesimalCharacter betaFunction(const Character& negative);

// Finite flow family F_t: the eps^0 part of negative * theta_{t eps}(negative^{-1}).
// Values are exact polynomials in the flow parameter. LocalityError when a
// pole survives the limit (i.e. when `negative` is scale-dependent).
Character flowFamily(const Character& negative, Param flowParam = Param::T,
                     int truncTarget = kDefaultOrder);

// Reconstructs the scale-independent negative part from its beta functional
// alone, through the grading identity eps Y(gamma) = -(beta * gamma):
// on a degree-n monomial,
//   gamma(m) = -(1/(n eps)) sum over coproduct terms with single-generator
//              left factor of beta(left) gamma(right).
Character gammaMinusFromBeta(const InfinitesimalCharacter& beta, int degreeBound);

struct RGReport {
  int scaleDegree;               // L-degree witness of the negative part
  InfinitesimalCharacter res;    // residue functional
  InfinitesimalCharacter beta;   // grading of the residue
  Character negative;            // Birkhoff negative part
  Character flow;                // F_t, polynomial in t
  Character negativeFromBeta;    // reconstruction from beta alone
  bool reconstructionMatches;    // negativeFromBeta == negative, exactly
};

RGReport rgReport(const Character& f, Parallelism mode = Parallelism::Parallel);

}  // namespace hopfren
