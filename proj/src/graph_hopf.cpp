#include "hopfren/graph_hopf.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>

#include "hopfren/errors.hpp"

namespace hopfren {

GenKey GraphHopfInstance::genKey(const std::string& canonKey, int marker) {
  return canonKey + "#s" + std::to_string(marker);
}

std::string GraphHopfInstance::registerGraph(const FeynGraph& g, const std::string& nameHint) {
  FeynGraph canon = g.canonical();
  std::string key = canon.canonicalKey();
  auto it = nameByCanon_.find(key);
  if (it != nameByCanon_.end()) return key;
  if (!canon.isOnePI())
    throw DomainError("graph '" + nameHint + "' is not 1PI; the coproduct is defined on 1PI graphs");
  std::string name = nameHint;
  if (canonByName_.count(name)) {
    int suffix = 2;
    while (canonByName_.count(name + "(" + std::to_string(suffix) + ")")) ++suffix;
    name += "(" + std::to_string(suffix) + ")";
  }
  nameByCanon_[key] = name;
  canonByName_[name] = key;
  defaultMarker_.emplace(name, 0);
  graphByCanon_.emplace(key, canon);
  int loops = canon.loops();
  maxLoops_ = std::max(maxLoops_, loops);
  int n = canon.externalCount();
  std::vector<int> markers = (n == 2) ? std::vector<int>{0, 1} : std::vector<int>{0};
  for (int m : markers) gens_.emplace(genKey(key, m), GraphGenInfo{canon, m, name, loops});
  return key;
}

GraphHopfInstance::GraphHopfInstance(const std::vector<CatalogEntry>& catalog) {
  std::vector<CatalogEntry> sorted = catalog;
  std::sort(sorted.begin(), sorted.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  std::deque<std::string> work;
  for (const auto& entry : sorted) {
    std::string key = registerGraph(entry.graph, entry.name);
    defaultMarker_[nameByCanon_.at(key)] = entry.marker;
    work.push_back(key);
  }
  // Close under components and quotients so every coproduct factor is a
  // registered generator.
  std::map<std::string, bool> seen;
  for (const auto& k : work) seen[k] = true;
  while (!work.empty()) {
    std::string key = work.front();
    work.pop_front();
    const FeynGraph g = graphByCanon_.at(key);
    const std::string parentName = nameByCanon_.at(key);
    for (const auto& subset : divergentSubgraphs(g)) {
      std::vector<std::vector<int>> comps = componentsOf(g, subset);
      std::vector<std::string> compNames;
      std::vector<std::vector<int>> compMarkers;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        FeynGraph part = componentGraph(g, comps[c]);
        std::string ck =
            registerGraph(part, parentName + ".sub" + std::to_string(c));
        if (!seen[ck]) {
          seen[ck] = true;
          work.push_back(ck);
        }
        compNames.push_back(nameByCanon_.at(ck));
        compMarkers.push_back(markerBasis(componentExternalCount(g, comps[c])));
      }
      // Odometer over the per-component marker choices.
      std::vector<std::size_t> pick(comps.size(), 0);
      while (true) {
        std::vector<int> markers(comps.size());
        std::string desc;
        for (std::size_t c = 0; c < comps.size(); ++c) {
          markers[c] = compMarkers[c][pick[c]];
          if (c) desc += "+";
          desc += compNames[c] + ".s" + std::to_string(markers[c]);
        }
        FeynGraph q = quotientGraph(g, subset, markers);
        std::string qk = registerGraph(q, parentName + "/" + desc);
        if (!seen[qk]) {
          seen[qk] = true;
          work.push_back(qk);
        }
        std::size_t c = 0;
        for (; c < pick.size(); ++c) {
          if (++pick[c] < compMarkers[c].size()) break;
          pick[c] = 0;
        }
        if (c == pick.size()) break;
      }
    }
  }
}

int GraphHopfInstance::degreeOf(const GenKey& g) const { return info(g).loops; }

std::vector<GenKey> GraphHopfInstance::generatorsOfDegree(int d) const {
  std::vector<GenKey> out;
  for (const auto& [k, inf] : gens_)
    if (inf.loops == d) out.push_back(k);
  return out;
}

std::vector<TensorTerm> GraphHopfInstance::reducedCoproduct(const GenKey& gk) const {
  auto cached = cpCache_.find(gk);
  if (cached != cpCache_.end()) return cached->second;
  const GraphGenInfo& inf = info(gk);
  const FeynGraph& g = inf.graph;
  std::map<std::pair<Monomial, Monomial>, Rational> terms;
  for (const auto& subset : divergentSubgraphs(g)) {
    std::vector<std::vector<int>> comps = componentsOf(g, subset);
    std::vector<std::string> compKeys;
    std::vector<std::vector<int>> compMarkers;
    for (const auto& comp : comps) {
      compKeys.push_back(componentGraph(g, comp).canonicalKey());
      compMarkers.push_back(markerBasis(componentExternalCount(g, comp)));
    }
    std::vector<std::size_t> pick(comps.size(), 0);
    while (true) {
      std::vector<int> markers(comps.size());
      Monomial left;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        markers[c] = compMarkers[c][pick[c]];
        left.push_back(genKey(compKeys[c], markers[c]));
      }
      std::string qk = quotientGraph(g, subset, markers).canonicalKey();
      Monomial right{genKey(qk, inf.marker)};
      auto key = std::make_pair(makeMonomial(std::move(left)), std::move(right));
      terms[key] += Rational(1);
      std::size_t c = 0;
      for (; c < pick.size(); ++c) {
        if (++pick[c] < compMarkers[c].size()) break;
        pick[c] = 0;
      }
      if (c == pick.size()) break;
    }
  }
  std::vector<TensorTerm> out;
  out.reserve(terms.size());
  for (const auto& [lr, c] : terms) {
    for (const auto& part : lr.first)
      if (!gens_.count(part)) throw IndexError("coproduct factor escaped the catalog closure");
    if (!gens_.count(lr.second.front()))
      throw IndexError("coproduct quotient escaped the catalog closure");
    out.push_back(TensorTerm{lr.first, lr.second, c});
  }
  cpCache_.emplace(gk, out);
  return out;
}

const GraphGenInfo& GraphHopfInstance::info(const GenKey& k) const {
  auto it = gens_.find(k);
  if (it == gens_.end()) throw IndexError("unknown graph generator key");
  return it->second;
}

std::string GraphHopfInstance::displayName(const GenKey& k) const {
  const GraphGenInfo& inf = info(k);
  return inf.graphName + ":s" + std::to_string(inf.marker);
}

GenKey GraphHopfInstance::keyByName(const std::string& display) const {
  std::string name = display;
  int marker = -1;
  auto pos = display.rfind(":s");
  if (pos != std::string::npos && pos + 3 == display.size() &&
      (display[pos + 2] == '0' || display[pos + 2] == '1')) {
    name = display.substr(0, pos);
    marker = display[pos + 2] - '0';
  }
  auto it = canonByName_.find(name);
  if (it == canonByName_.end()) throw IndexError("unknown graph name '" + name + "'");
  if (marker == -1) marker = defaultMarker_.at(name);
  GenKey k = genKey(it->second, marker);
  if (!gens_.count(k))
    throw IndexError("graph '" + name + "' has no external structure s" + std::to_string(marker));
  return k;
}

const FeynGraph& GraphHopfInstance::graphByName(const std::string& name) const {
  auto it = canonByName_.find(name);
  if (it == canonByName_.end()) throw IndexError("unknown graph name '" + name + "'");
  return graphByCanon_.at(it->second);
}

std::vector<std::string> GraphHopfInstance::graphNames() const {
  std::vector<std::string> names;
  names.reserve(canonByName_.size());
  for (const auto& [n, k] : canonByName_) names.push_back(n);
  return names;
}

std::vector<GenKey> GraphHopfInstance::allGenerators() const {
  std::vector<GenKey> out;
  out.reserve(gens_.size());
  for (const auto& [k, inf] : gens_) out.push_back(k);
  return out;
}

GenKey GraphHopfInstance::findGenerator(const FeynGraph& g, int marker) const {
  GenKey k = genKey(g.canonicalKey(), marker);
  return gens_.count(k) ? k : GenKey{};
}

std::vector<CatalogEntry> loadCatalogDir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DomainError("catalog directory '" + dir + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read catalog file " + path.string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("catalog file " + path.string() + ": " + e.what(), 0);
    }
    auto [graph, marker] = graphFromJson(j);
    out.push_back(CatalogEntry{path.stem().string(), std::move(graph), marker});
  }
  return out;
}

std::shared_ptr<const GraphHopfInstance> graphInstance(const std::string& dir) {
  std::string d = dir.empty() ? std::string(HOPFREN_CATALOG_DIR) : dir;
  static std::map<std::string, std::shared_ptr<const GraphHopfInstance>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto inst = std::make_shared<const GraphHopfInstance>(loadCatalogDir(d));
  cache.emplace(d, inst);
  return inst;
}

namespace {

// Distinct proper divergent 1PI components of g, as sorted edge subsets.
std::vector<std::vector<int>> divergentComponents(const FeynGraph& g) {
  std::set<std::vector<int>> comps;
  for (const auto& sub : divergentSubgraphs(g))
    for (const auto& part : componentsOf(g, sub)) comps.insert(part);
  return {comps.begin(), comps.end()};
}

bool nestedOrDisjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> meet;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
  return meet.empty() || meet.size() == a.size() || meet.size() == b.size();
}

// Loop counts along each maximal family of pairwise nested-or-disjoint
// divergent components. Overlapping divergences contribute one family per
// overlap resolution; a graph without subdivergences has the empty family.
std::vector<std::vector<int>> nestedLoopProfiles(const FeynGraph& g) {
  std::vector<std::vector<int>> comps = divergentComponents(g);
  int n = static_cast<int>(comps.size());
  std::vector<std::uint32_t> families;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; ok && i < n; ++i)
      for (int j = i + 1; ok && j < n; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u)) ok = nestedOrDisjoint(comps[i], comps[j]);
    if (ok) families.push_back(mask);
  }
  std::vector<std::vector<int>> profiles;
  for (std::uint32_t f : families) {
    bool maximal = true;
    for (std::uint32_t h : families)
      if (h != f && (h & f) == f) maximal = false;
    if (!maximal) continue;
    std::vector<int> loops;
    for (int i = 0; i < n; ++i)
      if (f >> i & 1u) loops.push_back(componentGraph(g, comps[i]).loops());
    profiles.push_back(std::move(loops));
  }
  return profiles;
}

}  // namespace

Character toyGraphCharacter(std::shared_ptr<const GraphHopfInstance> inst, int degreeBound,
                            int truncOrder, Param scaleParam) {
  // Mirrors the tree stand-in: one pole factor per member of a maximal
  // nested family of divergent components (plus the graph itself), at the
  // member's own loop number, summed over the maximal families. The two
  // external structures of a 2-point graph split one subtraction, hence the
  // half weight; this keeps marker pairs summing to a single pole factor and
  // makes the counterterms scale-free.
  std::map<GenKey, LaurentSeries> values;
  for (const auto& k : inst->generatorsUpTo(degreeBound)) {
    const GraphGenInfo& gi = inst->info(k);
    LaurentSeries whole = LaurentSeries::expScaled(gi.loops, scaleParam, truncOrder) *
                          toyPoleFactor(Rational(gi.loops), truncOrder);
    LaurentSeries sum = LaurentSeries::zero(truncOrder);
    for (const auto& profile : nestedLoopProfiles(gi.graph)) {
      LaurentSeries prod = LaurentSeries::constant(Rational(1));
      for (int l : profile) prod *= toyPoleFactor(Rational(l), truncOrder);
      sum += prod;
    }
    Rational weight = gi.graph.externalCount() == 2 ? Rational(1, 2) : Rational(1);
    values[k] = (whole * sum).scaled(weight);
  }
  return Character(std::move(inst), std::move(values), degreeBound);
}

}  // namespace hopfren
