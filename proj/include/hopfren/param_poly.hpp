#pragma once

#include <array>
#include <map>
#include <string>

#include "hopfren/rational.hpp"

namespace hopfren {

// Formal parameters available to coefficients. The ordered list is fixed for
// the whole library: L is the log of the scale, t the flow time, s a second
// flow time used only in two-parameter group-law identities.
enum class Param : int { L = 0, T = 1, S = 2 };

constexpr int kNumParams = 3;

const char* paramName(Param p);
Param paramFromName(const std::string& name);  // throws ParseError

// Exponent vector ordered (L, t, s); std::map's array ordering is the
// lexicographic monomial order used everywhere, printing included.
using Mono = std::array<int, kNumParams>;

inline constexpr Mono kMonoOne{0, 0, 0};

// Polynomial in (L, t, s) with Rational coefficients. Invariant: no explicit
// zero coefficients are stored; the zero polynomial has an empty map.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rational& c) {  // NOLINT: implicit constant embedding
    if (!c.isZero()) coeffs_[kMonoOne] = c;
  }
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT

  static ParamPoly variable(Param p, int power = 1);
  static ParamPoly monomial(const Mono& m, const Rational& c);

  bool isZero() const { return coeffs_.empty(); }
  bool isConstant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == kMonoOne);
  }
  // Constant term (coefficient of the empty monomial).
  Rational constantValue() const;

  int degreeIn(Param p) const;  // -1 for the zero polynomial
  int totalDegree() const;      // -1 for the zero polynomial

  const std::map<Mono, Rational>& terms() const { return coeffs_; }
  Rational coefficient(const Mono& m) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  ParamPoly scaled(const Rational& c) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) = default;

  // Substitutes `p` by `repl` (all other parameters untouched).
  ParamPoly substitute(Param p, const ParamPoly& repl) const;

  // Rendering: terms in lexicographic monomial order, e.g. "3/2 + L - 2 L t^2".
  std::string str() const;

 private:
  std::map<Mono, Rational> coeffs_;
  void addTerm(const Mono& m, const Rational& c);
};

ParamPoly pow(const ParamPoly& base, int exp);

}  // namespace hopfren
