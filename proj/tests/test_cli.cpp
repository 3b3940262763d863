#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <hopfren/cli.hpp>
#include <nlohmann/json.hpp>
#include <sstream>

using hopfren::runCli;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("coproduct of a tree generator") {
  RunResult r = run({"coproduct", "B[o]"});
  CHECK(r.code == 0);
  CHECK(r.out == "B[o]⊗1 + 1⊗B[o] + o⊗o\n");
  CHECK(r.err.empty());
}

TEST_CASE("coproduct auto-detects graph names") {
  RunResult r = run({"coproduct", "nested2"});
  CHECK(r.code == 0);
  CHECK(r.out == "nested2:s0⊗1 + 1⊗nested2:s0 + 2 triangle:s0⊗bubble:s0\n");

  RunResult rj = run({"coproduct", "tribubble", "--format", "json"});
  CHECK(rj.code == 0);
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j["command"] == "coproduct");
  CHECK(j["instance"] == "graphs");
  CHECK(j["generator"] == "tribubble:s0");
  CHECK(j["terms"].size() == 4);  // two trivial + two cut terms
  CHECK(j["terms"][0]["coeff"] == "1");
}

TEST_CASE("coproduct in the diffeomorphism coordinates") {
  RunResult r = run({"coproduct", "a2", "--instance", "diffeo"});
  CHECK(r.code == 0);
  CHECK(r.out == "a2⊗1 + 1⊗a2 + 3 a1⊗a1\n");
}

TEST_CASE("input errors exit with code 2 and a machine-readable record") {
  RunResult bad = run({"coproduct", "B["});
  CHECK(bad.code == 2);
  auto rec = nlohmann::json::parse(bad.err);
  CHECK(rec["exit"] == 2);
  CHECK(rec.contains("error"));
  CHECK(rec.contains("message"));

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"coproduct"}).code == 2);
  CHECK(run({"birkhoff", "--degree", "99"}).code == 2);
  CHECK(run({"coproduct", "a2", "--instance", "marsupial"}).code == 2);
}

TEST_CASE("birkhoff and bphz verdicts") {
  RunResult r = run({"birkhoff", "--degree", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "negative^{-1} * positive = phi on all generators: PASS"));
  CHECK(contains(r.out, "-1/eps"));

  RunResult b = run({"bphz", "--degree", "3"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "C = φ₋ and R = φ₊ on all generators: PASS"));

  RunResult bj = run({"bphz", "--degree", "3", "--format", "json"});
  CHECK(bj.code == 0);
  auto j = nlohmann::json::parse(bj.out);
  CHECK(j["status"] == "pass");
  CHECK(j["rows"].size() == 4);  // generators of degree <= 3

  RunResult g = run({"birkhoff", "--instance", "graphs", "--degree", "2"});
  CHECK(g.code == 0);
  CHECK(contains(g.out, "PASS"));
}

TEST_CASE("rg report") {
  RunResult r = run({"rg-report", "--degree", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "scale-dependence witness: 0"));
  CHECK(contains(r.out, "negative part scale-independent and reconstructed from beta: PASS"));
}

TEST_CASE("bracket of generators") {
  RunResult t = run({"bracket", "o", "B[o]"});
  CHECK(t.code == 0);
  CHECK(t.out == "[o, B[o]] = -B[o o]\n");

  RunResult g = run({"bracket", "triangle", "bubble"});
  CHECK(g.code == 0);
  CHECK(g.out == "[triangle, bubble] = 2 nested2:s0\n");

  // a bracket that leaves the catalog closure is a property failure, not a
  // usage error
  RunResult esc = run({"bracket", "triangle", "nested2"});
  CHECK(esc.code == 1);
  auto rec = nlohmann::json::parse(esc.err);
  CHECK(rec["exit"] == 1);
}

TEST_CASE("diffeo birkhoff from the toy loop and from a file") {
  RunResult r = run({"diffeo-birkhoff", "--toy-loops", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "loop = positive o negative^{-1} on all coefficients: PASS"));

  std::string path = "cli_loop_input.txt";
  {
    std::ofstream f(path);
    f << "# coefficient table\n";
    f << "1: 1/eps + 2\n";
    f << "2: (-1/2)/eps^2 + 3 + eps\n";
  }
  RunResult fr = run({"diffeo-birkhoff", path});
  CHECK(fr.code == 0);
  CHECK(contains(fr.out, "PASS"));

  CHECK(run({"diffeo-birkhoff"}).code == 2);
  CHECK(run({"diffeo-birkhoff", "no_such_file.txt"}).code == 2);
}

TEST_CASE("resolvent solvers") {
  RunResult c = run({"resolvent", "cubic", "-1", "1"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "x0 = -2+0i"));
  CHECK(contains(c.out, "max residual"));

  RunResult q = run({"resolvent", "quartic", "-5", "0", "4"});
  CHECK(q.code == 0);
  CHECK(contains(q.out, "resolvent cubic: X^3 + 5 X^2 - 16 X - 80"));

  RunResult qj = run({"resolvent", "quartic", "-5", "0", "4", "--format", "json"});
  auto j = nlohmann::json::parse(qj.out);
  CHECK(j["status"] == "pass");
  CHECK(j["roots"].size() == 4);

  CHECK(run({"resolvent"}).code == 2);
  CHECK(run({"resolvent", "cubic", "1/0", "2"}).code == 2);
}

TEST_CASE("star check") {
  RunResult r = run({"star-check", "--random", "5", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS"));

  RunResult rj = run({"star-check", "--random", "5", "--seed", "7", "--format", "json"});
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j["status"] == "pass");
  CHECK(j["count"] == 5);
  CHECK(j["maxDeviation"].get<double>() < 1e-9);

  // explicit regular pentagon
  RunResult p = run({"star-check", "0", "1", "-0.951056516295154", "0.309016994374947",
                     "-0.587785252292473", "-0.809016994374947", "0.587785252292473",
                     "-0.809016994374947", "0.951056516295154", "0.309016994374947"});
  CHECK(p.code == 0);

  CHECK(run({"star-check", "1", "2", "3"}).code == 2);
  // collinear triple: degenerate configuration reported as input error
  CHECK(run({"star-check", "-2", "0", "0", "0", "2", "0", "1", "3", "-1", "3"}).code == 2);
}

TEST_CASE("help and manual") {
  RunResult h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(contains(h.out, "coproduct"));

  RunResult m = run({"manual"});
  CHECK(m.code == 0);
  CHECK(contains(m.out, "star-check"));
  CHECK(contains(m.out, "--degree"));

  RunResult none = run({});
  CHECK(none.code == 0);
  CHECK(contains(none.out, "Usage"));
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"birkhoff", "--degree", "4", "--format", "json"},
        {"rg-report", "--degree", "3", "--format", "json"},
        {"star-check", "--random", "20", "--seed", "11", "--format", "json"},
        {"coproduct", "disjoint3"}}) {
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
