#include "hopfren/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfren/diffeo.hpp"
#include "hopfren/errors.hpp"
#include "hopfren/graph_hopf.hpp"
#include "hopfren/hopf.hpp"
#include "hopfren/lie.hpp"
#include "hopfren/resolvents.hpp"
#include "hopfren/rg.hpp"

namespace hopfren {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

constexpr double kGeomTol = 1e-9;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt(Complex z) {
  // radical formulas leave ~1e-16 dust on components that vanish exactly
  double scale = std::max({1.0, std::abs(z.real()), std::abs(z.imag())});
  double re = std::abs(z.real()) < 1e-12 * scale ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 1e-12 * scale ? 0.0 : z.imag();
  std::string s = fmt(re);
  s += im < 0 ? "-" : "+";
  s += fmt(std::abs(im));
  s += "i";
  return s;
}

void failureRecord(std::ostream& err, int code, const std::string& kind,
                   const std::string& message) {
  nlohmann::json j{{"exit", code}, {"error", kind}, {"message", message}};
  err << j.dump() << "\n";
}

struct Shared {
  int order = kDefaultOrder;
  int degree = 4;
  std::string instance = "trees";
  std::string format = "text";
  std::string catalog;
  std::uint64_t seed = 1;
};

void addCommon(CLI::App* cmd, Shared& s, bool withToy = true) {
  cmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--catalog", s.catalog, "Graph catalog directory override");
  cmd->add_option("--instance", s.instance, "Hopf algebra to work in")
      ->check(CLI::IsMember({"trees", "graphs", "diffeo"}))
      ->capture_default_str();
  if (withToy) {
    cmd->add_option("--order", s.order, "Series truncation order")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    cmd->add_option("--degree", s.degree, "Generator degree bound")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
  }
}

bool json(const Shared& s) { return s.format == "json"; }

std::shared_ptr<const HopfInstance> pickInstance(const Shared& s) {
  if (s.instance == "trees") return treeInstance();
  if (s.instance == "graphs") return graphInstance(s.catalog);
  return fdbInstance();
}

Character toyFor(const Shared& s) {
  if (s.instance == "trees") return toyTreeCharacter(treeInstance(), s.degree, s.order);
  if (s.instance == "graphs") return toyGraphCharacter(graphInstance(s.catalog), s.degree, s.order);
  throw DomainError("no toy character exists for instance '" + s.instance + "'");
}

std::string displayGen(const Shared& s, const GenKey& k) {
  if (s.instance == "graphs") return graphInstance(s.catalog)->displayName(k);
  return k;
}

std::string displayMonomial(const Shared& s, const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ' ';
    out += displayGen(s, m[i]);
  }
  return out;
}

// "a - 2 b + 1/2 c" from sorted (display, coefficient) rows; "0" when empty.
std::string signedJoin(const std::vector<std::pair<std::string, Rational>>& rows) {
  if (rows.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [name, c] : rows) {
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    Rational mag = c.abs();
    if (!mag.isOne()) {
      out += mag.str();
      out += ' ';
    }
    out += name;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- coproduct

int cmdCoproduct(const Shared& s, const std::string& input, bool instanceExplicit,
                 std::ostream& out) {
  Shared local = s;
  GenKey key;
  if (instanceExplicit) {
    if (local.instance == "trees")
      key = parseTree(input).key();
    else if (local.instance == "graphs")
      key = graphInstance(local.catalog)->keyByName(input);
    else {
      fdbInstance()->degreeOf(input);  // validates the coordinate name
      key = input;
    }
  } else {
    try {
      key = parseTree(input).key();
      local.instance = "trees";
    } catch (const ParseError&) {
      try {
        key = graphInstance(local.catalog)->keyByName(input);
        local.instance = "graphs";
      } catch (const IndexError&) {
        throw ParseError("'" + input + "' is neither a tree expression nor a catalog graph name",
                         0);
      }
    }
  }

  const auto inst = pickInstance(local);
  std::vector<TensorTerm> reduced = inst->reducedCoproduct(key);
  std::vector<std::tuple<std::string, std::string, Rational>> rows;
  std::string self = displayGen(local, key);
  rows.emplace_back(self, "1", Rational(1));
  rows.emplace_back("1", self, Rational(1));
  std::vector<std::tuple<std::string, std::string, Rational>> inner;
  for (const TensorTerm& t : reduced)
    inner.emplace_back(displayMonomial(local, t.left), displayMonomial(local, t.right), t.coeff);
  std::sort(inner.begin(), inner.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  rows.insert(rows.end(), inner.begin(), inner.end());

  if (json(local)) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [l, r, c] : rows)
      terms.push_back({{"left", l}, {"right", r}, {"coeff", c.str()}});
    nlohmann::json j{{"command", "coproduct"},
                     {"instance", local.instance},
                     {"generator", self},
                     {"terms", terms}};
    out << j.dump() << "\n";
  } else {
    std::string line;
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& [l, r, c] = rows[i];
      if (i) line += " + ";
      if (!c.isOne()) {
        line += c.str();
        line += ' ';
      }
      line += l + "⊗" + r;
    }
    out << line << "\n";
  }
  return kPass;
}

// ----------------------------------------------------------------- birkhoff

int cmdBirkhoff(const Shared& s, std::ostream& out, std::ostream& err) {
  Character toy = toyFor(s);
  BirkhoffPair pair = birkhoff(toy);
  Character recon = convolve(inverseCharacter(pair.negative), pair.positive);
  bool ok = true;
  std::vector<std::tuple<std::string, GenKey>> gens;
  for (const GenKey& g : toy.instance().generatorsUpTo(s.degree)) gens.emplace_back(displayGen(s, g), g);

  if (json(s)) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [name, g] : gens) {
      ok = ok && agreesOnCommonWindow(recon.genValue(g), toy.genValue(g));
      rows.push_back({{"generator", name},
                      {"phi", toy.genValue(g).str()},
                      {"negative", pair.negative.genValue(g).str()},
                      {"positive", pair.positive.genValue(g).str()}});
    }
    nlohmann::json j{{"command", "birkhoff"},
                     {"instance", s.instance},
                     {"degree", s.degree},
                     {"order", s.order},
                     {"rows", rows},
                     {"status", ok ? "pass" : "fail"}};
    out << j.dump() << "\n";
  } else {
    out << "generator | phi | negative | positive\n";
    for (const auto& [name, g] : gens) {
      ok = ok && agreesOnCommonWindow(recon.genValue(g), toy.genValue(g));
      out << name << " | " << toy.genValue(g).str() << " | " << pair.negative.genValue(g).str()
          << " | " << pair.positive.genValue(g).str() << "\n";
    }
    out << "negative^{-1} * positive = phi on all generators: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  if (!ok) failureRecord(err, kFail, "birkhoff-reconstruction", "splitting does not recompose");
  return ok ? kPass : kFail;
}

// --------------------------------------------------------------------- bphz

int cmdBphz(const Shared& s, std::ostream& out, std::ostream& err) {
  Character toy = toyFor(s);
  BirkhoffPair pair = birkhoff(toy);
  Character counter = bphzCounterterm(toy);
  Character renorm = bphzRenormalized(toy, counter);
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  table << "generator | phi | negative | positive | C | prepared | R\n";
  for (const GenKey& g : toy.instance().generatorsUpTo(s.degree)) {
    LaurentSeries prep = bphzPrepare(toy, counter, g);
    bool okC = counter.genValue(g) == pair.negative.genValue(g);
    bool okR = agreesOnCommonWindow(renorm.genValue(g), pair.positive.genValue(g));
    ok = ok && okC && okR;
    if (json(s)) {
      rows.push_back({{"generator", displayGen(s, g)},
                      {"phi", toy.genValue(g).str()},
                      {"negative", pair.negative.genValue(g).str()},
                      {"positive", pair.positive.genValue(g).str()},
                      {"counterterm", counter.genValue(g).str()},
                      {"prepared", prep.str()},
                      {"renormalized", renorm.genValue(g).str()},
                      {"match", okC && okR}});
    } else {
      table << displayGen(s, g) << " | " << toy.genValue(g).str() << " | "
            << pair.negative.genValue(g).str() << " | " << pair.positive.genValue(g).str() << " | "
            << counter.genValue(g).str() << " | " << prep.str() << " | "
            << renorm.genValue(g).str() << "\n";
    }
  }
  std::string verdict = std::string("C = φ₋ and R = φ₊ on all generators: ") +
                        (ok ? "PASS" : "FAIL");
  if (json(s)) {
    nlohmann::json j{{"command", "bphz"},   {"instance", s.instance},
                     {"degree", s.degree},  {"order", s.order},
                     {"rows", rows},        {"status", ok ? "pass" : "fail"},
                     {"verdict", verdict}};
    out << j.dump() << "\n";
  } else {
    out << table.str() << verdict << "\n";
  }
  if (!ok) failureRecord(err, kFail, "bphz-mismatch", "recursion disagrees with the splitting");
  return ok ? kPass : kFail;
}

// ---------------------------------------------------------------- rg-report

int cmdRgReport(const Shared& s, std::ostream& out, std::ostream& err) {
  Character toy = toyFor(s);
  RGReport rep = rgReport(toy);
  bool ok = rep.reconstructionMatches && rep.scaleDegree == 0;

  if (json(s)) {
    nlohmann::json rows = nlohmann::json::array();
    for (const GenKey& g : toy.instance().generatorsUpTo(s.degree)) {
      rows.push_back({{"generator", displayGen(s, g)},
                      {"residue", rep.res.genValue(g).str()},
                      {"beta", rep.beta.genValue(g).str()},
                      {"negative", rep.negative.genValue(g).str()},
                      {"negativeFromBeta", rep.negativeFromBeta.genValue(g).str()},
                      {"flow", rep.flow.genValue(g).str()},
                      {"match", rep.negativeFromBeta.genValue(g) == rep.negative.genValue(g)}});
    }
    nlohmann::json j{{"command", "rg-report"},
                     {"instance", s.instance},
                     {"degree", s.degree},
                     {"order", s.order},
                     {"scaleDegree", rep.scaleDegree},
                     {"rows", rows},
                     {"status", ok ? "pass" : "fail"}};
    out << j.dump() << "\n";
  } else {
    out << "scale-dependence witness: " << rep.scaleDegree << "\n";
    out << "generator | residue | beta | negative | negative-from-beta | flow | match\n";
    for (const GenKey& g : toy.instance().generatorsUpTo(s.degree)) {
      bool match = rep.negativeFromBeta.genValue(g) == rep.negative.genValue(g);
      out << displayGen(s, g) << " | " << rep.res.genValue(g).str() << " | "
          << rep.beta.genValue(g).str() << " | " << rep.negative.genValue(g).str() << " | "
          << rep.negativeFromBeta.genValue(g).str() << " | " << rep.flow.genValue(g).str() << " | "
          << (match ? "yes" : "no") << "\n";
    }
    out << "negative part scale-independent and reconstructed from beta: " << (ok ? "PASS" : "FAIL")
        << "\n";
  }
  if (!ok)
    failureRecord(err, kFail, "rg-report",
                  rep.scaleDegree != 0 ? "negative part depends on the scale"
                                       : "beta does not reconstruct the negative part");
  return ok ? kPass : kFail;
}

// ------------------------------------------------------------------ bracket

int cmdBracket(const Shared& s, bool instanceExplicit, const std::string& a, const std::string& b,
               std::ostream& out, std::ostream& err) {
  Shared local = s;
  if (!instanceExplicit) {
    // same convenience as coproduct: tree expressions win, otherwise treat
    // both arguments as catalog graph names
    try {
      parseTree(a);
      parseTree(b);
      local.instance = "trees";
    } catch (const ParseError&) {
      local.instance = "graphs";
    }
  }
  const Shared& cfg = local;
  std::vector<std::pair<std::string, Rational>> rows;
  if (cfg.instance == "trees") {
    auto combo = treeBracket(parseTree(a), parseTree(b));
    for (const auto& [t, c] : combo) rows.emplace_back(t.key(), c);
  } else if (cfg.instance == "graphs") {
    auto inst = graphInstance(cfg.catalog);
    std::map<GenKey, Rational> combo;
    try {
      combo = graphBracket(*inst, inst->keyByName(a), inst->keyByName(b));
    } catch (const UnsupportedInsertionError& e) {
      if (json(cfg)) {
        nlohmann::json j{{"command", "bracket"},
                         {"instance", cfg.instance},
                         {"status", "fail"},
                         {"reason", e.what()}};
        out << j.dump() << "\n";
      } else {
        out << "bracket undefined in this catalog: " << e.what() << "\n";
      }
      failureRecord(err, kFail, "unsupported-insertion", e.what());
      return kFail;
    }
    for (const auto& [k, c] : combo) rows.emplace_back(displayGen(cfg, k), c);
  } else {
    throw DomainError("bracket expects --instance trees or graphs");
  }

  if (json(cfg)) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [name, c] : rows) terms.push_back({{"gen", name}, {"coeff", c.str()}});
    nlohmann::json j{{"command", "bracket"},
                     {"instance", cfg.instance},
                     {"left", a},
                     {"right", b},
                     {"terms", terms},
                     {"status", "pass"}};
    out << j.dump() << "\n";
  } else {
    out << "[" << a << ", " << b << "] = " << signedJoin(rows) << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------- diffeo-birkhoff

FormalDiffeo loopFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open coefficient file '" + path + "'");
  std::map<int, LaurentSeries> byIndex;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto colon = trimmed.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineNo) + ": expected 'n: series'", 0);
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(trimmed.substr(0, colon), &used);
      while (used < colon && (trimmed[used] == ' ' || trimmed[used] == '\t')) ++used;
      if (used != colon) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineNo) + ": bad coefficient index", 0);
    }
    if (n < 1) throw ParseError("line " + std::to_string(lineNo) + ": index must be >= 1", 0);
    byIndex[n] = parseLaurent(trimmed.substr(colon + 1));
  }
  if (byIndex.empty()) throw DomainError("coefficient file '" + path + "' holds no entries");
  std::vector<LaurentSeries> cs(static_cast<size_t>(byIndex.rbegin()->first));
  for (const auto& [n, v] : byIndex) cs[static_cast<size_t>(n - 1)] = v;
  return FormalDiffeo(std::move(cs));
}

int cmdDiffeoBirkhoff(const Shared& s, int toyLoops, const std::string& file, std::ostream& out,
                      std::ostream& err) {
  FormalDiffeo loop = FormalDiffeo::identity(0);
  if (toyLoops > 0 && !file.empty())
    throw DomainError("pass either --toy-loops or a coefficient file, not both");
  if (toyLoops > 0) {
    Character toy = toyTreeCharacter(treeInstance(), toyLoops, s.order);
    loop = effectiveCouplingToy(toy, toyLoops);
  } else if (!file.empty()) {
    loop = loopFromFile(file);
  } else {
    throw DomainError("pass --toy-loops N or a coefficient file");
  }

  DiffeoBirkhoff bb = birkhoffDiffeo(loop);
  FormalDiffeo recon = compose(bb.positive, invertDiffeo(bb.negative));
  bool ok = true;
  for (int n = 1; n <= loop.orderBound(); ++n)
    ok = ok && agreesOnCommonWindow(recon.coeff(n), loop.coeff(n));
  std::vector<ParamPoly> atZero = evalAtZero(bb.positive);

  if (json(s)) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= loop.orderBound(); ++n)
      rows.push_back({{"n", n},
                      {"loop", loop.coeff(n).str()},
                      {"negative", bb.negative.coeff(n).str()},
                      {"positive", bb.positive.coeff(n).str()},
                      {"positiveAtZero", atZero[static_cast<size_t>(n - 1)].str()}});
    nlohmann::json j{{"command", "diffeo-birkhoff"},
                     {"orderBound", loop.orderBound()},
                     {"rows", rows},
                     {"status", ok ? "pass" : "fail"}};
    out << j.dump() << "\n";
  } else {
    out << "n | loop | negative | positive | positive at eps=0\n";
    for (int n = 1; n <= loop.orderBound(); ++n)
      out << n << " | " << loop.coeff(n).str() << " | " << bb.negative.coeff(n).str() << " | "
          << bb.positive.coeff(n).str() << " | " << atZero[static_cast<size_t>(n - 1)].str()
          << "\n";
    out << "loop = positive o negative^{-1} on all coefficients: " << (ok ? "PASS" : "FAIL")
        << "\n";
  }
  if (!ok) failureRecord(err, kFail, "diffeo-birkhoff", "splitting does not recompose");
  return ok ? kPass : kFail;
}

// ---------------------------------------------------------------- resolvent

std::string monicCubicText(const MonicCubic& m) {
  std::vector<std::pair<std::string, Rational>> rows;
  rows.emplace_back("X^3", Rational(1));
  if (!m.a2.isZero()) rows.emplace_back("X^2", m.a2);
  if (!m.a1.isZero()) rows.emplace_back("X", m.a1);
  if (!m.a0.isZero()) rows.emplace_back("1", m.a0);
  std::string out;
  bool first = true;
  for (const auto& [name, c] : rows) {
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    Rational mag = c.abs();
    if (!mag.isOne() || name == "1") out += mag.str();
    if (!mag.isOne() && name != "1") out += ' ';
    if (name != "1") out += name;
    first = false;
  }
  return out;
}

int cmdResolventCubic(const Shared& s, const std::string& pText, const std::string& qText,
                      std::ostream& out, std::ostream& err) {
  DepressedCubic c{Rational::fromString(pText), Rational::fromString(qText)};
  std::array<Complex, 3> roots = solveCubic(c);
  double residual = cubicResidual(c, roots);
  bool ok = residual < kGeomTol;
  if (json(s)) {
    nlohmann::json rs = nlohmann::json::array();
    for (Complex r : roots) rs.push_back({{"re", r.real()}, {"im", r.imag()}});
    nlohmann::json j{{"command", "resolvent-cubic"}, {"p", c.p.str()},
                     {"q", c.q.str()},              {"roots", rs},
                     {"residual", residual},        {"status", ok ? "pass" : "fail"}};
    out << j.dump() << "\n";
  } else {
    out << "x^3 + 3(" << c.p.str() << ")x + 2(" << c.q.str() << ")\n";
    for (size_t i = 0; i < roots.size(); ++i) out << "x" << i << " = " << fmt(roots[i]) << "\n";
    out << "max residual = " << fmt(residual) << "\n";
  }
  if (!ok) failureRecord(err, kFail, "cubic-residual", "root residual above tolerance");
  return ok ? kPass : kFail;
}

int cmdResolventQuartic(const Shared& s, const std::string& pText, const std::string& qText,
                        const std::string& rText, std::ostream& out, std::ostream& err) {
  DepressedQuartic q{Rational::fromString(pText), Rational::fromString(qText),
                     Rational::fromString(rText)};
  MonicCubic res = resolventCubicOfQuartic(q);
  std::array<Complex, 3> resRoots = solveMonicCubic(res);
  std::array<Complex, 4> roots = solveQuartic(q);
  double residual = quarticResidual(q, roots);
  bool ok = residual < kGeomTol;
  if (json(s)) {
    nlohmann::json rr = nlohmann::json::array();
    for (Complex r : resRoots) rr.push_back({{"re", r.real()}, {"im", r.imag()}});
    nlohmann::json rs = nlohmann::json::array();
    for (Complex r : roots) rs.push_back({{"re", r.real()}, {"im", r.imag()}});
    nlohmann::json j{{"command", "resolvent-quartic"},
                     {"p", q.p.str()},
                     {"q", q.q.str()},
                     {"r", q.r.str()},
                     {"resolventCubic", monicCubicText(res)},
                     {"resolventRoots", rr},
                     {"roots", rs},
                     {"residual", residual},
                     {"status", ok ? "pass" : "fail"}};
    out << j.dump() << "\n";
  } else {
    out << "x^4 + (" << q.p.str() << ")x^2 + (" << q.q.str() << ")x + (" << q.r.str() << ")\n";
    out << "resolvent cubic: " << monicCubicText(res) << "\n";
    for (size_t i = 0; i < resRoots.size(); ++i)
      out << "alpha" << i << " = " << fmt(resRoots[i]) << "\n";
    for (size_t i = 0; i < roots.size(); ++i) out << "x" << i << " = " << fmt(roots[i]) << "\n";
    out << "max residual = " << fmt(residual) << "\n";
  }
  if (!ok) failureRecord(err, kFail, "quartic-residual", "root residual above tolerance");
  return ok ? kPass : kFail;
}

// --------------------------------------------------------------- star-check

int cmdStarCheck(const Shared& s, const std::vector<double>& coords, int randomCount,
                 std::ostream& out, std::ostream& err) {
  if (randomCount > 0) {
    if (!coords.empty()) throw DomainError("pass coordinates or --random, not both");
    std::vector<double> devs = starSweep(randomCount, s.seed, Parallelism::Parallel);
    double worst = 0;
    for (double d : devs) worst = std::max(worst, d);
    bool ok = worst < kGeomTol;
    if (json(s)) {
      nlohmann::json j{{"command", "star-check"},
                       {"count", randomCount},
                       {"seed", s.seed},
                       {"maxDeviation", worst},
                       {"status", ok ? "pass" : "fail"}};
      out << j.dump() << "\n";
    } else {
      out << "cases: " << randomCount << "\nseed: " << s.seed
          << "\nmax deviation: " << fmt(worst) << "\n"
          << (ok ? "PASS" : "FAIL") << "\n";
    }
    if (!ok) failureRecord(err, kFail, "star-check", "deviation above tolerance");
    return ok ? kPass : kFail;
  }

  if (coords.size() != 10)
    throw DomainError("star-check expects 10 coordinates (x y per vertex) or --random N");
  std::array<Complex, 5> pentagon;
  for (int i = 0; i < 5; ++i)
    pentagon[static_cast<size_t>(i)] =
        Complex(coords[static_cast<size_t>(2 * i)], coords[static_cast<size_t>(2 * i + 1)]);
  StarCheckResult res = starCheck(pentagon);
  bool ok = res.maxDeviation < kGeomTol;
  if (json(s)) {
    nlohmann::json points = nlohmann::json::array();
    for (Complex z : pentagon) points.push_back({z.real(), z.imag()});
    nlohmann::json meets = nlohmann::json::array();
    for (Complex z : res.meets) meets.push_back({z.real(), z.imag()});
    nlohmann::json j{{"command", "star-check"},
                     {"points", points},
                     {"meets", meets},
                     {"maxDeviation", res.maxDeviation},
                     {"status", ok ? "pass" : "fail"}};
    out << j.dump() << "\n";
  } else {
    for (size_t i = 0; i < res.meets.size(); ++i)
      out << "meet" << i << " = " << fmt(res.meets[i]) << "\n";
    out << "max deviation: " << fmt(res.maxDeviation) << "\n" << (ok ? "PASS" : "FAIL") << "\n";
  }
  if (!ok) failureRecord(err, kFail, "star-check", "deviation above tolerance");
  return ok ? kPass : kFail;
}

}  // namespace

int runCli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf-algebraic renormalization workbench"};
  app.name("hopfren");
  app.require_subcommand(0, 1);

  Shared s;

  std::string cpInput;
  CLI::App* coproduct = app.add_subcommand(
      "coproduct", "Print the full coproduct of a generator (tree text, graph name, or a_n)");
  coproduct->add_option("input", cpInput, "Generator to expand")->required();
  addCommon(coproduct, s, false);

  CLI::App* birkhoffCmd = app.add_subcommand(
      "birkhoff", "Birkhoff-split the toy character and print both parts per generator");
  addCommon(birkhoffCmd, s);

  CLI::App* bphzCmd = app.add_subcommand(
      "bphz", "Compare the counterterm recursion against the Birkhoff splitting");
  addCommon(bphzCmd, s);

  CLI::App* rgCmd = app.add_subcommand(
      "rg-report", "Residues, beta values, flow family, and the reconstruction check");
  addCommon(rgCmd, s);

  std::string brLeft, brRight;
  CLI::App* bracketCmd =
      app.add_subcommand("bracket", "Bracket of two generators (trees or graphs)");
  bracketCmd->add_option("left", brLeft, "First generator")->required();
  bracketCmd->add_option("right", brRight, "Second generator")->required();
  addCommon(bracketCmd, s, false);

  int toyLoops = 0;
  std::string coeffFile;
  CLI::App* diffeoCmd = app.add_subcommand(
      "diffeo-birkhoff", "Split a diffeomorphism-valued loop into pole and finite parts");
  diffeoCmd->add_option("file", coeffFile, "Coefficient table, lines of 'n: series'");
  diffeoCmd->add_option("--toy-loops", toyLoops, "Build the loop from the toy tree character")
      ->check(CLI::Range(1, 6));
  diffeoCmd->add_option("--order", s.order, "Series truncation order")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  diffeoCmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* resolvent = app.add_subcommand("resolvent", "Classical resolvent solvers");
  resolvent->require_subcommand(1);
  std::string rcP, rcQ;
  CLI::App* cubicCmd = resolvent->add_subcommand("cubic", "Solve x^3 + 3 p x + 2 q = 0");
  cubicCmd->add_option("p", rcP, "Rational p")->required();
  cubicCmd->add_option("q", rcQ, "Rational q")->required();
  std::string rqP, rqQ, rqR;
  CLI::App* quarticCmd =
      resolvent->add_subcommand("quartic", "Solve x^4 + p x^2 + q x + r = 0 via the resolvent");
  quarticCmd->add_option("p", rqP, "Rational p")->required();
  quarticCmd->add_option("q", rqQ, "Rational q")->required();
  quarticCmd->add_option("r", rqR, "Rational r")->required();
  quarticCmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cubicCmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<double> starCoords;
  int randomCount = 0;
  CLI::App* starCmd =
      app.add_subcommand("star-check", "Five-circle concyclicity check for a pentagon");
  starCmd->add_option("coords", starCoords, "x y pairs of the five vertices")->expected(-1);
  starCmd->add_option("--random", randomCount, "Check this many random pentagons")
      ->check(CLI::Range(1, 1000000));
  starCmd->add_option("--seed", s.seed, "Random seed")->capture_default_str();
  starCmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* manualCmd = app.add_subcommand("manual", "Print the full manual for every command");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    failureRecord(err, kBadInput, "usage", e.what());
    return kBadInput;
  }

  try {
    if (*coproduct) return cmdCoproduct(s, cpInput, coproduct->count("--instance") > 0, out);
    if (*birkhoffCmd) return cmdBirkhoff(s, out, err);
    if (*bphzCmd) return cmdBphz(s, out, err);
    if (*rgCmd) return cmdRgReport(s, out, err);
    if (*bracketCmd)
      return cmdBracket(s, bracketCmd->count("--instance") > 0, brLeft, brRight, out, err);
    if (*diffeoCmd) return cmdDiffeoBirkhoff(s, toyLoops, coeffFile, out, err);
    if (*cubicCmd) return cmdResolventCubic(s, rcP, rcQ, out, err);
    if (*quarticCmd) return cmdResolventQuartic(s, rqP, rqQ, rqR, out, err);
    if (*starCmd) return cmdStarCheck(s, starCoords, randomCount, out, err);
    if (*manualCmd) {
      // App::help delegates to the selected subcommand, which here would be
      // `manual` itself; format the root app directly instead
      out << app.get_formatter()->make_help(&app, app.get_name(), CLI::AppFormatMode::All);
      return kPass;
    }
    out << app.help();
    return kPass;
  } catch (const ParseError& e) {
    failureRecord(err, kBadInput, "parse", e.what());
    return kBadInput;
  } catch (const IndexError& e) {
    failureRecord(err, kBadInput, "unknown-input", e.what());
    return kBadInput;
  } catch (const DomainError& e) {
    failureRecord(err, kBadInput, "domain", e.what());
    return kBadInput;
  } catch (const TruncationError& e) {
    failureRecord(err, kBadInput, "truncation", e.what());
    return kBadInput;
  } catch (const SingularError& e) {
    failureRecord(err, kBadInput, "singular", e.what());
    return kBadInput;
  } catch (const DegenerateConfigError& e) {
    failureRecord(err, kBadInput, "degenerate-configuration", e.what());
    return kBadInput;
  } catch (const Error& e) {
    failureRecord(err, kFail, "computation", e.what());
    return kFail;
  }
}

}  // namespace hopfren
