#include <cctype>
#include <sstream>
#include <vector>

#include "hopfren/errors.hpp"
#include "hopfren/laurent.hpp"

namespace hopfren {

namespace {

// One printable addend: sign handled by the caller, `body` includes the eps
// power. Single-monomial coefficients hoist their sign; sums keep parentheses.
struct RenderedTerm {
  bool negative;
  std::string body;
};

std::string epsSuffix(int d) {
  if (d == 0) return "";
  std::ostringstream os;
  os << (d < 0 ? "/eps" : " eps");
  int a = d < 0 ? -d : d;
  if (a > 1) os << "^" << a;
  return os.str();
}

RenderedTerm renderTerm(int d, const ParamPoly& p) {
  if (p.terms().size() == 1) {
    const auto& [mono, c] = *p.terms().begin();
    ParamPoly mag = ParamPoly::monomial(mono, c.abs());
    std::string body = mag.str();
    if (body == "1" && d > 0) body.clear();
    if (!body.empty() && d > 0) body += " ";
    std::string eps = epsSuffix(d);
    if (d > 0) eps = eps.substr(1);  // drop the leading space from " eps"
    return {c.sign() < 0, body + eps};
  }
  return {false, "(" + p.str() + ")" + epsSuffix(d)};
}

}  // namespace

std::string LaurentSeries::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = minDegree(); d <= maxStoredDegree(); ++d) {
    ParamPoly c = coeff(d);
    if (c.isZero()) continue;
    RenderedTerm t = renderTerm(d, c);
    if (first) {
      if (t.negative) os << "-";
      first = false;
    } else {
      os << (t.negative ? " - " : " + ");
    }
    os << t.body;
  }
  return os.str();
}

namespace {

enum class Tok { Int, Param, Eps, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) return {Tok::End, "", start};
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Token t{Tok::Int, s_.substr(i_, j - i_), start};
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      std::string w = s_.substr(i_, j - i_);
      i_ = j;
      if (w == "eps") return {Tok::Eps, w, start};
      if (w == "L" || w == "t" || w == "s") return {Tok::Param, w, start};
      throw ParseError("unknown symbol '" + w + "'", start);
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::Plus, "+", start};
      case '-': return {Tok::Minus, "-", start};
      case '*': return {Tok::Star, "*", start};
      case '/': return {Tok::Slash, "/", start};
      case '^': return {Tok::Caret, "^", start};
      case '(': return {Tok::LParen, "(", start};
      case ')': return {Tok::RParen, ")", start};
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  LaurentSeries parseSeries() {
    LaurentSeries acc = LaurentSeries::zero(kExactOrder);
    bool neg = false;
    if (cur_.kind == Tok::Minus) {
      neg = true;
      advance();
    } else if (cur_.kind == Tok::Plus) {
      advance();
    }
    acc = acc + signedTerm(neg);
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool n = cur_.kind == Tok::Minus;
      advance();
      acc = acc + signedTerm(n);
    }
    return acc;
  }

  void expectEnd() {
    if (cur_.kind != Tok::End) throw ParseError("trailing input '" + cur_.text + "'", cur_.pos);
  }

 private:
  Lexer lex_;
  Token cur_;

  void advance() { cur_ = lex_.next(); }

  bool startsFactor() const {
    return cur_.kind == Tok::Int || cur_.kind == Tok::Param || cur_.kind == Tok::Eps ||
           cur_.kind == Tok::LParen;
  }

  LaurentSeries signedTerm(bool neg) {
    LaurentSeries t = term();
    return neg ? -t : t;
  }

  LaurentSeries term() {
    LaurentSeries acc = factor();
    for (;;) {
      if (cur_.kind == Tok::Star) {
        advance();
        acc = acc * factor();
      } else if (cur_.kind == Tok::Slash) {
        std::size_t pos = cur_.pos;
        advance();
        LaurentSeries d = factor();
        if (d.isZero()) throw ParseError("division by zero", pos);
        if (!d.isExact() || d.minDegree() != d.maxStoredDegree() ||
            !d.coeff(d.minDegree()).isConstant())
          throw ParseError("can only divide by constants and eps powers", pos);
        acc = acc * d.inverse();
      } else if (startsFactor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  int exponent(bool allowNegative) {
    if (cur_.kind != Tok::Caret) return 1;
    advance();
    bool neg = false;
    if (allowNegative && cur_.kind == Tok::Minus) {
      neg = true;
      advance();
    }
    if (cur_.kind != Tok::Int) throw ParseError("expected integer exponent", cur_.pos);
    int e = std::stoi(cur_.text);
    advance();
    return neg ? -e : e;
  }

  LaurentSeries factor() {
    switch (cur_.kind) {
      case Tok::Int: {
        Rational v = Rational::fromString(cur_.text);
        advance();
        return LaurentSeries::constant(v);
      }
      case Tok::Param: {
        Param p = paramFromName(cur_.text);
        advance();
        int e = exponent(false);
        return LaurentSeries::constant(ParamPoly::variable(p, e));
      }
      case Tok::Eps: {
        advance();
        int e = exponent(true);
        return LaurentSeries::monomial(e, ParamPoly(Rational(1)));
      }
      case Tok::LParen: {
        std::size_t pos = cur_.pos;
        advance();
        LaurentSeries s = parseSeries();
        if (cur_.kind != Tok::RParen) throw ParseError("unbalanced parenthesis", pos);
        advance();
        return s;
      }
      default:
        throw ParseError("expected a value, got '" + cur_.text + "'", cur_.pos);
    }
  }
};

}  // namespace

LaurentSeries parseLaurent(const std::string& text, int trunc) {
  Parser p(text);
  LaurentSeries s = p.parseSeries();
  p.expectEnd();
  return s.withTruncation(trunc);
}

}  // namespace hopfren
