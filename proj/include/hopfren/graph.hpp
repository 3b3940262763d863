#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfren/parallel.hpp"

#include <json.hpp>

namespace hopfren {

// Vertex kinds: plain 3-valent interaction vertices, plus the 2-valent
// edge-correction vertices produced when a 2-point subgraph is contracted
// (one kind per external-structure marker).
enum class VertexType { V3, V2S0, V2S1 };

int valence(VertexType t);
std::string vertexTypeName(VertexType t);
VertexType vertexTypeFromName(const std::string& name);

struct Gradings {
  int internalEdges;
  int vertices;
  int verticesMinusOne;
  int loops;
};

// Connected Feynman graph of the 6-dimensional cubic scalar theory.
// Vertices are indices 0..n-1; internal edges are unordered index pairs
// (parallel edges allowed, self-loops rejected); external legs are counted
// per vertex (legs carry no labels: the external structures in use are
// symmetric under leg exchange). Immutable after construction.
class FeynGraph {
 public:
  FeynGraph(std::vector<VertexType> types, std::vector<std::pair<int, int>> edges,
            std::vector<int> legCounts);

  int vertexCount() const { return static_cast<int>(types_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  VertexType typeOf(int v) const;
  int legsAt(int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<VertexType>& types() const { return types_; }
  const std::vector<int>& legCounts() const { return legCounts_; }

  int externalCount() const;  // total number of external legs
  Gradings gradings() const;
  int loops() const { return gradings().loops; }
  int superficialDegree() const;  // 6 L - 2 I

  bool isOnePI() const;  // connected and bridge-free

  // Canonical form under type-preserving vertex relabeling (exhaustive
  // search over relabelings; vertex count capped at 10).
  std::string canonicalKey() const;
  FeynGraph canonical() const;
  bool isomorphicTo(const FeynGraph& other) const;

 private:
  std::vector<VertexType> types_;
  std::vector<std::pair<int, int>> edges_;  // normalized (a < b), sorted
  std::vector<int> legCounts_;
};

// Partition of an edge-index subset into connected components, each sorted,
// ordered by smallest edge index.
std::vector<std::vector<int>> componentsOf(const FeynGraph& g, const std::vector<int>& edgeIdx);

// The component spanned by the given edges as a standalone graph: hidden
// incidences (edges out of the component, legs of the parent) become legs.
FeynGraph componentGraph(const FeynGraph& g, const std::vector<int>& edgeIdx);

// External-leg count the component would have as a standalone graph.
int componentExternalCount(const FeynGraph& g, const std::vector<int>& edgeIdx);

// True iff every connected component of the edge subset is 1PI with
// superficial degree >= 0. The subset must be non-empty and proper.
bool admissibleSubset(const FeynGraph& g, const std::vector<int>& edgeIdx);

// All proper non-empty internal-edge subsets whose components are all 1PI
// and superficially divergent, as sorted edge-index lists in ascending
// subset order. Parallel mode scans the subset space with OpenMP and gives
// identical output.
std::vector<std::vector<int>> divergentSubgraphs(const FeynGraph& g,
                                                 Parallelism mode = Parallelism::Serial);

// Markers available for a subgraph component with the given external-leg
// count: {0,1} for 2-point components, {0} for 3-point ones.
std::vector<int> markerBasis(int externalCount);

// Contract each component of the subset to a single vertex: 2-point
// components become the edge-correction vertex of the component's marker,
// 3-point components a plain vertex. markers[i] pairs with componentsOf(...)
// entry i. AdmissibilityError on an inadmissible subset.
FeynGraph quotientGraph(const FeynGraph& g, const std::vector<int>& edgeIdx,
                        const std::vector<int>& markers);

// JSON form: {vertices:[{id,type}], internalEdges:[[a,b]], externalLegs:[[v,k]],
// extStructure:"s0"|"s1"}. The reader also accepts graphs whose legs are
// modeled as "external-stub" vertices hanging off internal ones.
nlohmann::json graphToJson(const FeynGraph& g, int marker);
std::pair<FeynGraph, int> graphFromJson(const nlohmann::json& j);

}  // namespace hopfren
