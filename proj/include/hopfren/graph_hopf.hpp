#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "hopfren/graph.hpp"
#include "hopfren/hopf.hpp"

namespace hopfren {

// One generator of the graph Hopf algebra: a 1PI graph together with an
// external-structure marker (s0/s1 for 2-point graphs, s0 otherwise).
struct GraphGenInfo {
  FeynGraph graph;  // canonical labeling
  int marker;
  std::string graphName;  // display name of the underlying graph
  int loops;
};

// Catalog entry as loaded from disk: stable name, graph, default marker.
struct CatalogEntry {
  std::string name;
  FeynGraph graph;
  int marker;
};

// Hopf algebra of 1PI graphs, graded by loop number. Built from a catalog
// and closed under taking divergent-subgraph components and quotients, so
// every key appearing in a coproduct is itself a generator. Discovered
// graphs get names derived from their first discovery ("bibubble/bubble.s0").
class GraphHopfInstance : public HopfInstance {
 public:
  explicit GraphHopfInstance(const std::vector<CatalogEntry>& catalog);

  std::string name() const override { return "graphs"; }
  int degreeOf(const GenKey& g) const override;
  std::vector<GenKey> generatorsOfDegree(int d) const override;
  std::vector<TensorTerm> reducedCoproduct(const GenKey& g) const override;

  const GraphGenInfo& info(const GenKey& k) const;
  std::string displayName(const GenKey& k) const;  // "bubble:s0"
  // Accepts "name" (default marker) or "name:s0"/"name:s1".
  GenKey keyByName(const std::string& display) const;
  const FeynGraph& graphByName(const std::string& name) const;
  std::vector<std::string> graphNames() const;
  std::vector<GenKey> allGenerators() const;
  int maxLoops() const { return maxLoops_; }

  // Generator key for a graph + marker, or the empty string when the pair
  // is not part of the closure.
  GenKey findGenerator(const FeynGraph& g, int marker) const;

 private:
  // Canonicalizes, deduplicates, creates the marker variants, queues for
  // closure processing. Returns the canonical key.
  std::string registerGraph(const FeynGraph& g, const std::string& nameHint);
  static GenKey genKey(const std::string& canonKey, int marker);

  std::map<GenKey, GraphGenInfo> gens_;
  std::map<std::string, FeynGraph> graphByCanon_;
  std::map<std::string, std::string> nameByCanon_;
  std::map<std::string, std::string> canonByName_;
  std::map<std::string, int> defaultMarker_;  // graph name -> marker from catalog
  int maxLoops_ = 0;
  mutable std::map<GenKey, std::vector<TensorTerm>> cpCache_;
};

// Reads every *.json file in the directory; the entry name is the file stem.
std::vector<CatalogEntry> loadCatalogDir(const std::string& dir);

// Instance over the catalog directory (HOPFREN_CATALOG_DIR by default),
// cached per directory.
std::shared_ptr<const GraphHopfInstance> graphInstance(const std::string& dir = {});

// Dimensional-regularization stand-in on graphs, mirroring the tree toy
// character with the nested-subtree weights replaced by accumulated loop
// counts: value(G) = expScaled(L, scaleParam) * prod_{k=1..L} toyPoleFactor(k).
Character toyGraphCharacter(std::shared_ptr<const GraphHopfInstance> inst, int degreeBound,
                            int truncOrder = kDefaultOrder, Param scaleParam = Param::L);

}  // namespace hopfren
