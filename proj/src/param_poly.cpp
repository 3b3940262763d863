#include "hopfren/param_poly.hpp"

#include <algorithm>
#include <sstream>

#include "hopfren/errors.hpp"

namespace hopfren {

const char* paramName(Param p) {
  switch (p) {
    case Param::L: return "L";
    case Param::T: return "t";
    case Param::S: return "s";
  }
  throw DomainError("unknown parameter id");
}

Param paramFromName(const std::string& name) {
  if (name == "L") return Param::L;
  if (name == "t") return Param::T;
  if (name == "s") return Param::S;
  throw ParseError("unknown parameter name '" + name + "'", 0);
}

ParamPoly ParamPoly::variable(Param p, int power) {
  if (power < 0) throw DomainError("variable with negative power");
  Mono m = kMonoOne;
  m[static_cast<int>(p)] = power;
  return monomial(m, Rational(1));
}

ParamPoly ParamPoly::monomial(const Mono& m, const Rational& c) {
  ParamPoly r;
  if (!c.isZero()) r.coeffs_[m] = c;
  return r;
}

Rational ParamPoly::constantValue() const { return coefficient(kMonoOne); }

Rational ParamPoly::coefficient(const Mono& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int ParamPoly::degreeIn(Param p) const {
  int d = -1;
  for (const auto& [m, c] : coeffs_) d = std::max(d, m[static_cast<int>(p)]);
  return d;
}

int ParamPoly::totalDegree() const {
  int d = -1;
  for (const auto& [m, c] : coeffs_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

void ParamPoly::addTerm(const Mono& m, const Rational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = coeffs_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) coeffs_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [m, c] : coeffs_) r.coeffs_[m] = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.coeffs_) addTerm(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.coeffs_) addTerm(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ma, ca] : a.coeffs_)
    for (const auto& [mb, cb] : b.coeffs_) {
      Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      r.addTerm(m, ca * cb);
    }
  return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly r;
  if (c.isZero()) return r;
  for (const auto& [m, v] : coeffs_) r.coeffs_[m] = v * c;
  return r;
}

ParamPoly ParamPoly::substitute(Param p, const ParamPoly& repl) const {
  const int idx = static_cast<int>(p);
  ParamPoly out;
  for (const auto& [m, c] : coeffs_) {
    Mono rest = m;
    rest[idx] = 0;
    ParamPoly term = ParamPoly::monomial(rest, c);
    if (m[idx] > 0) term *= pow(repl, m[idx]);
    out += term;
  }
  return out;
}

ParamPoly pow(const ParamPoly& base, int exp) {
  if (exp < 0) throw DomainError("pow with negative exponent");
  ParamPoly acc(Rational(1));
  for (int k = 0; k < exp; ++k) acc *= base;
  return acc;
}

std::string ParamPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool hasVars = (m != kMonoOne);
    bool printCoeff = !mag.isOne() || !hasVars;
    if (printCoeff) os << mag.str();
    if (hasVars) {
      bool firstVar = !printCoeff;
      for (int i = 0; i < kNumParams; ++i) {
        if (m[i] == 0) continue;
        if (!firstVar || printCoeff) os << " ";
        os << paramName(static_cast<Param>(i));
        if (m[i] > 1) os << "^" << m[i];
        firstVar = false;
      }
    }
  }
  return os.str();
}

}  // namespace hopfren
