#pragma once

#include <string>
#include <vector>

#include "hopfren/param_poly.hpp"

namespace hopfren {

// Truncation order meaning "all coefficients known" (pole parts, monomials,
// finite Laurent polynomials built exactly). Large sentinel, saturating.
constexpr int kExactOrder = 1 << 28;

// Default working truncation order for series computations.
constexpr int kDefaultOrder = 10;

// Truncated Laurent series in the regulator eps with ParamPoly coefficients.
//
// Stored picture: coefficients for degrees [minDeg, minDeg + size); degrees
// above the stored range but <= trunc are exactly zero; degrees > trunc are
// unknown. Canonical form strips zero coefficients at both ends; the zero
// series has an empty coefficient vector. Equality compares canonical stored
// content (a zero series equals zero regardless of window).
class LaurentSeries {
 public:
  LaurentSeries() : minDeg_(0), trunc_(kExactOrder) {}  // exact zero

  static LaurentSeries zero(int trunc = kExactOrder);
  static LaurentSeries constant(const Rational& c);
  static LaurentSeries constant(const ParamPoly& p);
  // c * eps^deg, exact.
  static LaurentSeries monomial(int deg, const ParamPoly& c);
  // Coefficients for degrees [minDeg, minDeg + coeffs.size()), window trunc.
  static LaurentSeries fromCoeffs(int minDeg, std::vector<ParamPoly> coeffs, int trunc);

  // exp(k * param * eps) truncated at order `trunc`: sum_m (k param)^m eps^m / m!.
  // Requires k >= 0.
  static LaurentSeries expScaled(int k, Param param, int trunc = kDefaultOrder);

  bool isZero() const { return coeffs_.empty(); }
  int minDegree() const;            // throws PoleError-free; IndexError on zero
  int maxStoredDegree() const;      // IndexError on zero
  int truncationOrder() const { return trunc_; }
  bool isExact() const { return trunc_ >= kExactOrder; }

  // Coefficient of eps^d. Zero beyond the stored range while d <= trunc;
  // TruncationError for d > trunc.
  ParamPoly coeff(int d) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  LaurentSeries scaled(const Rational& c) const;
  LaurentSeries scaledPoly(const ParamPoly& p) const;  // multiply by eps-free polynomial
  LaurentSeries shifted(int k) const;                  // multiply by eps^k (exact shift)

  // Multiplicative inverse. Leading coefficient must be a nonzero Rational
  // constant (SingularError otherwise; SingularError on zero). An exact
  // non-monomial input has an infinite reciprocal and must be clipped first
  // (TruncationError); exact monomials invert exactly.
  LaurentSeries inverse() const;

  // Projection onto strictly negative eps-degrees. Requires the window to
  // cover degree -1 (TruncationError otherwise); the result is exact.
  LaurentSeries polePart() const;
  // Complement (id - polePart): degrees >= 0, window preserved.
  LaurentSeries holoPart() const;
  bool hasPole() const;

  // Coefficient of eps^0; PoleError if a pole term is present, TruncationError
  // if the window does not reach 0.
  ParamPoly constantTerm() const;

  // Weakens the window to `trunc`, clipping stored content beyond it.
  LaurentSeries withTruncation(int trunc) const;

  // Largest degree of `p` appearing in any coefficient; -1 if none.
  int maxDegreeIn(Param p) const;
  // Applies ParamPoly::substitute to every coefficient.
  LaurentSeries substitute(Param p, const ParamPoly& repl) const;

  // Content equality (see class comment). Windows are not compared.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.minDeg_ == b.minDeg_ && a.coeffs_ == b.coeffs_;
  }

  // True when stored coefficients agree on every degree <= k; TruncationError
  // if either window is below k.
  friend bool agreesUpTo(const LaurentSeries& a, const LaurentSeries& b, int k);
  // Agreement over the intersection of the two windows.
  friend bool agreesOnCommonWindow(const LaurentSeries& a, const LaurentSeries& b);

  // Human-readable rendering, e.g. "(1/2)/eps^2 + (3/2 + L)/eps + 7/2".
  std::string str() const;

 private:
  int minDeg_;
  std::vector<ParamPoly> coeffs_;
  int trunc_;
  void normalize();
};

// Saturating truncation-order addition.
int satAdd(int a, int b);

// Parses the renderer's grammar back into a series (window = kExactOrder for
// pure Laurent polynomials unless `/...` truncation tail present). Accepts
// rationals, parameters L/t/s, eps powers, parentheses, + - * / ^.
LaurentSeries parseLaurent(const std::string& text, int trunc = kExactOrder);

}  // namespace hopfren
