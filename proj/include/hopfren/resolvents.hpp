#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "hopfren/parallel.hpp"
#include "hopfren/rational.hpp"

namespace hopfren {

using Complex = std::complex<double>;

// x^3 + 3 p x + 2 q
struct DepressedCubic {
  Rational p, q;
};

// x^4 + p x^2 + q x + r
struct DepressedQuartic {
  Rational p, q, r;
};

// X^3 + a2 X^2 + a1 X + a0
struct MonicCubic {
  Rational a2, a1, a0;
};

// Radical solution: roots are u + v over the three cube roots u of
// -q - sqrt(p^3 + q^2), paired so that u v = -p. Sorted by (re, im).
std::array<Complex, 3> solveCubic(const DepressedCubic& c);
std::array<Complex, 3> solveMonicCubic(const MonicCubic& c);

// Exact resolvent cubic X^3 - p X^2 - 4 r X + (4 p r - q^2), whose roots are
// ab + cd, ac + bd, ad + bc for the quartic roots a, b, c, d.
MonicCubic resolventCubicOfQuartic(const DepressedQuartic& q);

// Roots via the resolvent cubic; candidate assemblies are scored by the
// largest residual and the best is returned, sorted by (re, im).
std::array<Complex, 4> solveQuartic(const DepressedQuartic& q);

double cubicResidual(const DepressedCubic& c, const std::array<Complex, 3>& roots);
double quarticResidual(const DepressedQuartic& q, const std::array<Complex, 4>& roots);

// The rational covariant (a d - b c)/(a + d - b - c): equivariant under
// simultaneous affine maps of the four inputs. DegenerateConfigError when
// the denominator vanishes.
Complex covariantResolvent(Complex a, Complex b, Complex c, Complex d);
Rational covariantResolvent(const Rational& a, const Rational& b, const Rational& c,
                            const Rational& d);

// Line AB x line CD; DegenerateConfigError when parallel.
Complex lineIntersect(Complex a, Complex b, Complex c, Complex d);
// Center of the circle through three points; DegenerateConfigError when
// collinear.
Complex circumcenter(Complex a, Complex b, Complex c);

// Second intersection of the circles (A, B, J) and (J, C, D) with
// J = AC x BD, computed as the reflection of J across the center line.
// Coincides with covariantResolvent(A, B, C, D).
Complex circumcircleMeet(Complex a, Complex b, Complex c, Complex d);

// Five-circle check for a pentagon P0..P4 (cyclic order): each vertex spans
// a spike triangle against the diagonal of its neighbors; consecutive spike
// circumcircles share a crossing point, and their five second intersections
// are concyclic. Inputs are normalized (centroid to 0, RMS radius to 1)
// before any circle is built; maxDeviation measures how far the last two
// meets are from the circle through the first three.
struct StarCheckResult {
  std::array<Complex, 5> meets;
  double maxDeviation;
};

StarCheckResult starCheck(const std::array<Complex, 5>& pentagon);

// Regular pentagon with per-coordinate perturbations up to 0.15.
std::array<Complex, 5> randomPentagon(std::uint64_t seed);

// Star-check deviations for `count` random pentagons; deterministic in the
// seed, identical in both execution modes.
std::vector<double> starSweep(int count, std::uint64_t seed,
                              Parallelism mode = Parallelism::Serial);

}  // namespace hopfren
