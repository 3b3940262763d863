#include "hopfren/rational.hpp"

#include <ostream>

namespace hopfren {

Rational Rational::fromString(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal", 0);
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class q(s, 10);
      q.canonicalize();
      return Rational(q);
    }
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw SingularError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + s + "'", 0);
  }
}

std::string Rational::str() const {
  if (isInteger()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class acc = 1;
  for (int k = 2; k <= n; ++k) acc *= k;
  return Rational(mpq_class(acc));
}

Rational pow(const Rational& base, int exp) {
  if (exp < 0) throw DomainError("pow with negative exponent");
  Rational acc(1);
  for (int k = 0; k < exp; ++k) acc *= base;
  return acc;
}

}  // namespace hopfren
