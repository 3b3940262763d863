#include "hopfren/laurent.hpp"

#include <algorithm>

#include "hopfren/errors.hpp"

namespace hopfren {

int satAdd(int a, int b) {
  if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
  long s = static_cast<long>(a) + b;
  if (s >= kExactOrder) return kExactOrder;
  if (s <= -kExactOrder) return -kExactOrder;
  return static_cast<int>(s);
}

void LaurentSeries::normalize() {
  // Clip content beyond the window.
  if (!coeffs_.empty() && trunc_ < kExactOrder) {
    long maxStored = static_cast<long>(minDeg_) + static_cast<long>(coeffs_.size()) - 1;
    if (maxStored > trunc_) {
      long keep = static_cast<long>(trunc_) - minDeg_ + 1;
      if (keep <= 0)
        coeffs_.clear();
      else
        coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].isZero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    minDeg_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) minDeg_ = 0;
}

LaurentSeries LaurentSeries::zero(int trunc) {
  LaurentSeries s;
  s.trunc_ = trunc;
  return s;
}

LaurentSeries LaurentSeries::constant(const Rational& c) { return monomial(0, ParamPoly(c)); }

LaurentSeries LaurentSeries::constant(const ParamPoly& p) { return monomial(0, p); }

LaurentSeries LaurentSeries::monomial(int deg, const ParamPoly& c) {
  LaurentSeries s;
  s.minDeg_ = deg;
  s.coeffs_ = {c};
  s.trunc_ = kExactOrder;
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::fromCoeffs(int minDeg, std::vector<ParamPoly> coeffs, int trunc) {
  LaurentSeries s;
  s.minDeg_ = minDeg;
  s.coeffs_ = std::move(coeffs);
  s.trunc_ = trunc;
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::expScaled(int k, Param param, int trunc) {
  if (k < 0) throw DomainError("expScaled requires a nonnegative integer scale");
  if (trunc < 0) throw DomainError("expScaled requires a nonnegative truncation order");
  if (k == 0) return constant(Rational(1));  // exp(0) is exactly 1
  if (trunc >= kExactOrder)
    throw TruncationError("expScaled is an infinite series; choose a finite truncation order");
  if (trunc > 4096) throw DomainError("expScaled truncation order unreasonably large");
  std::vector<ParamPoly> coeffs;
  ParamPoly kx = ParamPoly::variable(param).scaled(Rational(k));
  ParamPoly term(Rational(1));
  for (int m = 0; m <= trunc; ++m) {
    coeffs.push_back(term);
    term = term * kx;
    term = term.scaled(Rational(1, m + 1));
  }
  return fromCoeffs(0, std::move(coeffs), trunc);
}

int LaurentSeries::minDegree() const {
  if (coeffs_.empty()) throw IndexError("minDegree of zero series");
  return minDeg_;
}

int LaurentSeries::maxStoredDegree() const {
  if (coeffs_.empty()) throw IndexError("maxStoredDegree of zero series");
  return minDeg_ + static_cast<int>(coeffs_.size()) - 1;
}

ParamPoly LaurentSeries::coeff(int d) const {
  if (d > trunc_) throw TruncationError("coefficient beyond truncation window");
  if (coeffs_.empty() || d < minDeg_) return ParamPoly();
  std::size_t idx = static_cast<std::size_t>(d - minDeg_);
  if (idx >= coeffs_.size()) return ParamPoly();
  return coeffs_[idx];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.isZero() && a.isExact()) return b;
  if (b.isZero() && b.isExact()) return a;
  int trunc = std::min(a.trunc_, b.trunc_);
  if (a.isZero()) return b.withTruncation(trunc);
  if (b.isZero()) return a.withTruncation(trunc);
  int lo = std::min(a.minDeg_, b.minDeg_);
  int hi = std::min(std::max(a.maxStoredDegree(), b.maxStoredDegree()), trunc);
  std::vector<ParamPoly> coeffs;
  for (int d = lo; d <= hi; ++d) coeffs.push_back(a.coeff(d) + b.coeff(d));
  return LaurentSeries::fromCoeffs(lo, std::move(coeffs), trunc);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.isZero() || b.isZero()) {
    // 0 * x is exactly 0 whatever the unknown tail of x.
    return LaurentSeries::zero(kExactOrder);
  }
  int trunc = std::min(satAdd(a.trunc_, b.minDeg_), satAdd(b.trunc_, a.minDeg_));
  int lo = a.minDeg_ + b.minDeg_;
  int hi = std::min(satAdd(a.maxStoredDegree(), b.maxStoredDegree()), trunc);
  std::vector<ParamPoly> coeffs;
  if (hi >= lo) coeffs.assign(static_cast<std::size_t>(hi - lo + 1), ParamPoly());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      int d = a.minDeg_ + static_cast<int>(i) + b.minDeg_ + static_cast<int>(j);
      if (d > hi) break;
      coeffs[static_cast<std::size_t>(d - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries::fromCoeffs(lo, std::move(coeffs), trunc);
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
  if (c.isZero()) return zero(kExactOrder);
  LaurentSeries r = *this;
  for (auto& p : r.coeffs_) p = p.scaled(c);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::scaledPoly(const ParamPoly& p) const {
  if (p.isZero()) return zero(kExactOrder);
  LaurentSeries r = *this;
  for (auto& q : r.coeffs_) q = q * p;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r = *this;
  if (r.coeffs_.empty()) return r;
  r.minDeg_ += k;
  r.trunc_ = satAdd(r.trunc_, k);
  return r;
}

LaurentSeries LaurentSeries::inverse() const {
  if (isZero()) throw SingularError("inverse of zero series");
  const ParamPoly& lead = coeffs_.front();
  if (!lead.isConstant())
    throw SingularError("inverse requires a constant leading coefficient, got " + lead.str());
  Rational c0 = lead.constantValue();
  if (coeffs_.size() == 1 && isExact()) {
    // Exact monomial: exact reciprocal.
    return monomial(-minDeg_, ParamPoly(c0.inverse()));
  }
  if (isExact())
    throw TruncationError(
        "inverse of an exact non-monomial series is infinite; clip with withTruncation first");
  // Reciprocal of the unit part u = eps^{-m} * this, then shift back.
  int m = minDeg_;
  int uTrunc = satAdd(trunc_, -m);  // window of u; also the window of 1/u
  if (uTrunc < 0) throw TruncationError("window too small to invert series");
  std::vector<ParamPoly> u;
  for (int d = 0; d <= uTrunc; ++d) u.push_back(coeff(m + d));
  std::vector<ParamPoly> r(static_cast<std::size_t>(uTrunc) + 1);
  Rational inv0 = c0.inverse();
  r[0] = ParamPoly(inv0);
  for (int k = 1; k <= uTrunc; ++k) {
    ParamPoly acc;
    for (int j = 1; j <= k; ++j) acc += u[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
    r[static_cast<std::size_t>(k)] = (-acc).scaled(inv0);
  }
  return fromCoeffs(-m, std::move(r), satAdd(uTrunc, -m));
}

LaurentSeries LaurentSeries::polePart() const {
  if (isZero() || minDeg_ >= 0) return zero(kExactOrder);
  if (trunc_ < -1) throw TruncationError("window does not determine the full pole part");
  std::vector<ParamPoly> coeffs;
  for (int d = minDeg_; d <= -1; ++d) coeffs.push_back(coeff(d));
  return fromCoeffs(minDeg_, std::move(coeffs), kExactOrder);
}

LaurentSeries LaurentSeries::holoPart() const {
  if (isZero()) return *this;
  if (minDeg_ >= 0) return *this;
  if (trunc_ < -1) throw TruncationError("window does not determine the full pole part");
  std::vector<ParamPoly> coeffs;
  for (int d = 0; d <= std::min(trunc_, maxStoredDegree()); ++d) coeffs.push_back(coeff(d));
  return fromCoeffs(0, std::move(coeffs), trunc_);
}

bool LaurentSeries::hasPole() const { return !isZero() && minDeg_ < 0; }

ParamPoly LaurentSeries::constantTerm() const {
  if (hasPole()) throw PoleError("constant term of a series with poles: " + str());
  if (trunc_ < 0) throw TruncationError("window does not reach degree 0");
  return coeff(0);
}

LaurentSeries LaurentSeries::withTruncation(int trunc) const {
  LaurentSeries r = *this;
  r.trunc_ = std::min(r.trunc_, trunc);
  r.normalize();
  return r;
}

int LaurentSeries::maxDegreeIn(Param p) const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degreeIn(p));
  return d;
}

LaurentSeries LaurentSeries::substitute(Param p, const ParamPoly& repl) const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = c.substitute(p, repl);
  r.normalize();
  return r;
}

bool agreesUpTo(const LaurentSeries& a, const LaurentSeries& b, int k) {
  if (a.trunc_ < k || b.trunc_ < k) throw TruncationError("comparison beyond a truncation window");
  int lo = std::min(a.coeffs_.empty() ? k : a.minDeg_, b.coeffs_.empty() ? k : b.minDeg_);
  for (int d = lo; d <= k; ++d)
    if (!(a.coeff(d) == b.coeff(d))) return false;
  return true;
}

bool agreesOnCommonWindow(const LaurentSeries& a, const LaurentSeries& b) {
  int w = std::min(a.trunc_, b.trunc_);
  if (w >= kExactOrder) return a == b;
  return agreesUpTo(a, b, w);
}

}  // namespace hopfren
