#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <hopfren/errors.hpp>
#include <hopfren/graph.hpp>
#include <hopfren/graph_hopf.hpp>

using namespace hopfren;

namespace {
const VertexType V3 = VertexType::V3;

FeynGraph bubble() { return FeynGraph({V3, V3}, {{0, 1}, {0, 1}}, {1, 1}); }
FeynGraph triangle() { return FeynGraph({V3, V3, V3}, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1}); }
}  // namespace

TEST_CASE("vertex types") {
  CHECK(valence(V3) == 3);
  CHECK(valence(VertexType::V2S0) == 2);
  CHECK(vertexTypeFromName(vertexTypeName(VertexType::V2S1)) == VertexType::V2S1);
  CHECK_THROWS_AS(vertexTypeFromName("widget"), DomainError);
}

TEST_CASE("construction validates valences and connectivity") {
  CHECK_NOTHROW(bubble());
  // wrong valence
  CHECK_THROWS_AS(FeynGraph({V3, V3}, {{0, 1}}, {1, 1}), DomainError);
  // self-loop
  CHECK_THROWS_AS(FeynGraph({V3}, {{0, 0}}, {1}), DomainError);
  // disconnected
  CHECK_THROWS_AS(FeynGraph({V3, V3, V3, V3}, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}, {1, 1, 1, 1}),
                  DomainError);
}

TEST_CASE("gradings and superficial degree") {
  FeynGraph b = bubble();
  CHECK(b.gradings().internalEdges == 2);
  CHECK(b.gradings().loops == 1);
  CHECK(b.externalCount() == 2);
  CHECK(b.superficialDegree() == 2);

  FeynGraph t = triangle();
  CHECK(t.loops() == 1);
  CHECK(t.superficialDegree() == 0);

  // one-loop box: 4 external legs, convergent
  FeynGraph box({V3, V3, V3, V3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {1, 1, 1, 1});
  CHECK(box.superficialDegree() == -2);
}

TEST_CASE("one-particle irreducibility") {
  CHECK(bubble().isOnePI());
  // two vertices joined by a single edge: the edge is a bridge
  FeynGraph bridge({V3, V3}, {{0, 1}}, {2, 2});
  CHECK_FALSE(bridge.isOnePI());
}

TEST_CASE("canonical form is label-invariant") {
  FeynGraph t1 = triangle();
  FeynGraph t2({V3, V3, V3}, {{2, 1}, {0, 2}, {1, 0}}, {1, 1, 1});
  CHECK(t1.canonicalKey() == t2.canonicalKey());
  CHECK(t1.isomorphicTo(t2));
  CHECK_FALSE(t1.isomorphicTo(bubble()));
  // vertex types participate in the invariant
  FeynGraph m0({V3, V3, VertexType::V2S0}, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 0});
  FeynGraph m1({V3, V3, VertexType::V2S1}, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 0});
  CHECK_FALSE(m0.isomorphicTo(m1));
}

TEST_CASE("json round trip") {
  auto inst = graphInstance();
  for (const std::string& name : inst->graphNames()) {
    const FeynGraph& g = inst->graphByName(name);
    auto [back, marker] = graphFromJson(graphToJson(g, 0));
    CHECK(back.isomorphicTo(g));
    CHECK(marker == 0);
  }
  auto [b1, m1] = graphFromJson(graphToJson(bubble(), 1));
  CHECK(m1 == 1);

  // the reader also accepts legs spelled as explicit stub vertices
  nlohmann::json stubbed = {
      {"vertices",
       {{{"id", 0}, {"type", "internal-3valent"}},
        {{"id", 1}, {"type", "internal-3valent"}},
        {{"id", 7}, {"type", "external-stub"}},
        {{"id", 8}, {"type", "external-stub"}}}},
      {"internalEdges", {{0, 1}, {0, 1}, {0, 7}, {1, 8}}}};
  auto [g, m] = graphFromJson(stubbed);
  CHECK(g.isomorphicTo(bubble()));
  CHECK(m == 0);

  CHECK_THROWS_AS(graphFromJson(nlohmann::json{{"vertices", 3}}), ParseError);
}

TEST_CASE("divergent subgraph scan") {
  auto inst = graphInstance();
  auto countFor = [&](const std::string& n) {
    return divergentSubgraphs(inst->graphByName(n)).size();
  };
  CHECK(countFor("bubble") == 0);
  CHECK(countFor("triangle") == 0);
  CHECK(countFor("box") == 0);
  CHECK(countFor("nested2") == 2);
  CHECK(countFor("bibubble") == 1);
  CHECK(countFor("tribubble") == 1);
  CHECK(countFor("disjoint3") == 3);

  // serial and parallel scans agree exactly
  for (const std::string& n : {"nested2", "disjoint3"}) {
    const FeynGraph& g = inst->graphByName(n);
    CHECK(divergentSubgraphs(g, Parallelism::Serial) ==
          divergentSubgraphs(g, Parallelism::Parallel));
  }

  // the two divergent subsets of nested2 are overlapping triangles
  const FeynGraph& n2 = inst->graphByName("nested2");
  for (const auto& sub : divergentSubgraphs(n2)) {
    CHECK(sub.size() == 3);
    CHECK(componentGraph(n2, sub).isomorphicTo(triangle()));
  }
}

TEST_CASE("quotient contraction") {
  auto inst = graphInstance();
  const FeynGraph& n2 = inst->graphByName("nested2");
  auto subs = divergentSubgraphs(n2);
  FeynGraph q = quotientGraph(n2, subs[0], {0});
  CHECK(q.isomorphicTo(bubble()));
  CHECK(q.loops() == n2.loops() - 1);

  // contracting a 2-point component inserts the marker vertex of its kind
  const FeynGraph& bb = inst->graphByName("bibubble");
  auto bsubs = divergentSubgraphs(bb);
  REQUIRE(bsubs.size() == 1);
  FeynGraph q1 = quotientGraph(bb, bsubs[0], {1});
  CHECK(std::count(q1.types().begin(), q1.types().end(), VertexType::V2S1) == 1);
  CHECK(q1.externalCount() == 2);
  CHECK_FALSE(q1.isomorphicTo(quotientGraph(bb, bsubs[0], {0})));

  CHECK_THROWS_AS(quotientGraph(n2, {}, {}), AdmissibilityError);
  CHECK_THROWS_AS(quotientGraph(n2, {0}, {0}), AdmissibilityError);  // not 1PI
}

TEST_CASE("instance closure") {
  auto inst = graphInstance();
  // 7 catalog classes plus the quotient classes they generate
  CHECK(inst->graphNames().size() == 16);
  // 2-point classes carry two markers each
  CHECK(inst->allGenerators().size() == 21);
  CHECK(inst->maxLoops() == 3);
  CHECK(inst->degreeOf(inst->keyByName("disjoint3")) == 3);
  CHECK(inst->keyByName("bubble:s1") != inst->keyByName("bubble:s0"));
  CHECK(inst->keyByName("bubble") == inst->keyByName("bubble:s0"));
  CHECK_THROWS_AS(inst->keyByName("pentagon"), IndexError);
  CHECK(inst->displayName(inst->keyByName("triangle")) == "triangle:s0");

  // no closure member contains a marker vertex inside a divergent subset:
  // every discovered class is itself contraction-free or contracts cleanly
  for (const std::string& name : inst->graphNames()) {
    const FeynGraph& g = inst->graphByName(name);
    for (const auto& sub : divergentSubgraphs(g)) {
      for (const auto& part : componentsOf(g, sub)) {
        const FeynGraph comp = componentGraph(g, part);
        for (VertexType t : comp.types()) CHECK(t == V3);
      }
    }
  }
}

TEST_CASE("coproduct respects the loop grading") {
  auto inst = graphInstance();
  for (const GenKey& k : inst->allGenerators()) {
    int d = inst->degreeOf(k);
    for (const TensorTerm& term : inst->reducedCoproduct(k)) {
      CHECK_FALSE(term.left.empty());
      CHECK_FALSE(term.right.empty());
      CHECK(inst->degreeOfMonomial(term.left) + inst->degreeOfMonomial(term.right) == d);
    }
  }
}

TEST_CASE("frozen coproducts of the catalog graphs") {
  auto inst = graphInstance();

  // one-loop graphs are primitive
  for (const char* n : {"bubble:s0", "bubble:s1", "triangle", "box"})
    CHECK(inst->reducedCoproduct(inst->keyByName(n)).empty());

  // nested2: two triangle subgraphs, both contracting to the bubble
  auto d = inst->reducedCoproduct(inst->keyByName("nested2:s1"));
  REQUIRE(d.size() == 1);
  CHECK(d[0].coeff == Rational(2));
  CHECK(d[0].left == makeMonomial({inst->keyByName("triangle:s0")}));
  // the quotient collapses onto the already-registered bubble, marker kept
  CHECK(d[0].right == makeMonomial({inst->keyByName("bubble:s1")}));

  // tribubble: inner bubble with either marker, quotients distinct
  auto dt = inst->reducedCoproduct(inst->keyByName("tribubble"));
  REQUIRE(dt.size() == 2);
  CHECK(dt[0].coeff == Rational(1));
  CHECK(dt[1].coeff == Rational(1));
  CHECK(dt[0].right != dt[1].right);
  for (const auto& term : dt) {
    REQUIRE(term.left.size() == 1);
    CHECK(inst->info(term.left[0]).graph.isomorphicTo(bubble()));
    CHECK(inst->degreeOfMonomial(term.right) == 1);
  }

  // disjoint3: total coefficient mass counts (subset, marker) assignments
  auto dd = inst->reducedCoproduct(inst->keyByName("disjoint3"));
  Rational mass;
  int pairLeft = 0;
  for (const auto& term : dd) {
    mass += term.coeff;
    if (term.left.size() == 2) pairLeft += static_cast<int>(term.coeff.num().get_si());
  }
  CHECK(mass == Rational(8));
  CHECK(pairLeft == 4);  // four marker assignments contract both bubbles
}

TEST_CASE("generator lookup by graph") {
  auto inst = graphInstance();
  CHECK(inst->findGenerator(bubble(), 1) == inst->keyByName("bubble:s1"));
  // a graph outside the closure is simply not found
  FeynGraph box5({V3, V3, V3, V3, V3},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, {1, 1, 1, 1, 1});
  CHECK(inst->findGenerator(box5, 0).empty());
}
