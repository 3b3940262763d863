#include "hopfren/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hopfren/errors.hpp"

namespace hopfren {

int valence(VertexType t) { return t == VertexType::V3 ? 3 : 2; }

std::string vertexTypeName(VertexType t) {
  switch (t) {
    case VertexType::V3:
      return "internal-3valent";
    case VertexType::V2S0:
      return "edge-correction-s0";
    case VertexType::V2S1:
      return "edge-correction-s1";
  }
  throw DomainError("unknown vertex type");
}

VertexType vertexTypeFromName(const std::string& name) {
  if (name == "internal-3valent") return VertexType::V3;
  if (name == "edge-correction-s0") return VertexType::V2S0;
  if (name == "edge-correction-s1") return VertexType::V2S1;
  throw DomainError("unknown vertex type '" + name + "'");
}

namespace {

// Union-find over a fixed vertex range.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool connectedOn(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices.empty()) return true;
  int maxV = *std::max_element(vertices.begin(), vertices.end());
  Dsu dsu(maxV + 1);
  for (const auto& [a, b] : edges) dsu.unite(a, b);
  int root = dsu.find(vertices.front());
  for (int v : vertices)
    if (dsu.find(v) != root) return false;
  return true;
}

char typeLetter(VertexType t) {
  return t == VertexType::V3 ? 'a' : (t == VertexType::V2S0 ? 'b' : 'c');
}

}  // namespace

FeynGraph::FeynGraph(std::vector<VertexType> types, std::vector<std::pair<int, int>> edges,
                     std::vector<int> legCounts)
    : types_(std::move(types)), edges_(std::move(edges)), legCounts_(std::move(legCounts)) {
  int n = vertexCount();
  if (n == 0) throw DomainError("graph needs at least one vertex");
  if (static_cast<int>(legCounts_.size()) != n)
    throw DomainError("leg-count list does not match vertex count");
  for (auto& [a, b] : edges_) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw IndexError("edge endpoint out of range");
    if (a == b) throw DomainError("self-loops are not supported");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<int> degree(n, 0);
  for (const auto& [a, b] : edges_) {
    ++degree[a];
    ++degree[b];
  }
  for (int v = 0; v < n; ++v) {
    if (legCounts_[v] < 0) throw DomainError("negative leg count");
    if (degree[v] + legCounts_[v] != valence(types_[v]))
      throw DomainError("vertex " + std::to_string(v) + " has incidence " +
                        std::to_string(degree[v] + legCounts_[v]) + ", expected " +
                        std::to_string(valence(types_[v])));
  }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (!connectedOn(all, edges_)) throw DomainError("graph is not connected");
}

VertexType FeynGraph::typeOf(int v) const {
  if (v < 0 || v >= vertexCount()) throw IndexError("vertex index out of range");
  return types_[v];
}

int FeynGraph::legsAt(int v) const {
  if (v < 0 || v >= vertexCount()) throw IndexError("vertex index out of range");
  return legCounts_[v];
}

int FeynGraph::externalCount() const {
  return std::accumulate(legCounts_.begin(), legCounts_.end(), 0);
}

Gradings FeynGraph::gradings() const {
  int i = edgeCount();
  int v = vertexCount();
  return Gradings{i, v, v - 1, i - v + 1};
}

int FeynGraph::superficialDegree() const {
  Gradings g = gradings();
  return 6 * g.loops - 2 * g.internalEdges;
}

bool FeynGraph::isOnePI() const {
  // Connected by construction; 1PI additionally means no internal edge is a
  // bridge, checked by deleting each edge in turn.
  std::vector<int> all(vertexCount());
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    std::vector<std::pair<int, int>> rest;
    rest.reserve(edges_.size() - 1);
    for (std::size_t j = 0; j < edges_.size(); ++j)
      if (j != k) rest.push_back(edges_[j]);
    if (!connectedOn(all, rest)) return false;
  }
  return true;
}

namespace {

std::string serializeUnder(const FeynGraph& g, const std::vector<int>& pos) {
  // pos[old] = new. Types are fixed by the block structure of the search, so
  // the key starts with the sorted type letters.
  int n = g.vertexCount();
  std::string s;
  s.reserve(static_cast<std::size_t>(n) * 4 + g.edgeCount() * 3 + 8);
  std::vector<char> typeAt(n);
  std::vector<char> legAt(n);
  for (int v = 0; v < n; ++v) {
    typeAt[pos[v]] = typeLetter(g.typeOf(v));
    legAt[pos[v]] = static_cast<char>('0' + g.legsAt(v));
  }
  s.append(typeAt.begin(), typeAt.end());
  s.push_back('|');
  std::vector<std::pair<int, int>> re;
  re.reserve(g.edgeCount());
  for (const auto& [a, b] : g.edges()) {
    int x = pos[a], y = pos[b];
    re.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(re.begin(), re.end());
  for (const auto& [a, b] : re) {
    s.push_back(static_cast<char>('0' + a));
    s.push_back(static_cast<char>('0' + b));
    s.push_back(',');
  }
  s.push_back('|');
  s.append(legAt.begin(), legAt.end());
  return s;
}

std::vector<int> canonicalOrder(const FeynGraph& g) {
  int n = g.vertexCount();
  if (n > 10) throw DomainError("canonical labeling supports at most 10 vertices");
  // Group vertices by type; the minimal key necessarily lists types in
  // sorted order, so only within-block permutations need trying.
  std::vector<std::vector<int>> blocks(3);
  for (int v = 0; v < n; ++v) blocks[static_cast<int>(g.typeOf(v))].push_back(v);
  std::string best;
  std::vector<int> bestPos;
  std::vector<int> pos(n);
  auto assignAndTest = [&]() {
    int next = 0;
    for (const auto& block : blocks)
      for (int old : block) pos[old] = next++;
    std::string key = serializeUnder(g, pos);
    if (best.empty() || key < best) {
      best = key;
      bestPos = pos;
    }
  };
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      assignAndTest();
      return;
    }
    std::sort(blocks[b].begin(), blocks[b].end());
    do {
      self(self, b + 1);
    } while (std::next_permutation(blocks[b].begin(), blocks[b].end()));
  };
  rec(rec, 0);
  return bestPos;
}

}  // namespace

std::string FeynGraph::canonicalKey() const {
  return serializeUnder(*this, canonicalOrder(*this));
}

FeynGraph FeynGraph::canonical() const {
  std::vector<int> pos = canonicalOrder(*this);
  int n = vertexCount();
  std::vector<VertexType> types(n);
  std::vector<int> legs(n);
  for (int v = 0; v < n; ++v) {
    types[pos[v]] = types_[v];
    legs[pos[v]] = legCounts_[v];
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size());
  for (const auto& [a, b] : edges_) edges.emplace_back(pos[a], pos[b]);
  return FeynGraph(std::move(types), std::move(edges), std::move(legs));
}

bool FeynGraph::isomorphicTo(const FeynGraph& other) const {
  return canonicalKey() == other.canonicalKey();
}

std::vector<std::vector<int>> componentsOf(const FeynGraph& g, const std::vector<int>& edgeIdx) {
  Dsu dsu(g.vertexCount());
  for (int e : edgeIdx) {
    if (e < 0 || e >= g.edgeCount()) throw IndexError("edge index out of range");
    dsu.unite(g.edges()[e].first, g.edges()[e].second);
  }
  std::map<int, std::vector<int>> byRoot;
  for (int e : edgeIdx) byRoot[dsu.find(g.edges()[e].first)].push_back(e);
  std::vector<std::vector<int>> comps;
  comps.reserve(byRoot.size());
  for (auto& [root, edges] : byRoot) {
    std::sort(edges.begin(), edges.end());
    comps.push_back(std::move(edges));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

namespace {

std::vector<int> spannedVertices(const FeynGraph& g, const std::vector<int>& edgeIdx) {
  std::vector<int> vs;
  for (int e : edgeIdx) {
    vs.push_back(g.edges()[e].first);
    vs.push_back(g.edges()[e].second);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// 1PI check for one connected edge set: no selected edge is a bridge of the
// spanned subgraph. A single edge is its own bridge.
bool edgeSetOnePI(const FeynGraph& g, const std::vector<int>& edgeIdx) {
  std::vector<int> vs = spannedVertices(g, edgeIdx);
  for (std::size_t k = 0; k < edgeIdx.size(); ++k) {
    std::vector<std::pair<int, int>> rest;
    rest.reserve(edgeIdx.size() - 1);
    for (std::size_t j = 0; j < edgeIdx.size(); ++j)
      if (j != k) rest.push_back(g.edges()[edgeIdx[j]]);
    if (!connectedOn(vs, rest)) return false;
  }
  return true;
}

int edgeSetSuperficialDegree(const FeynGraph& g, const std::vector<int>& edgeIdx) {
  int i = static_cast<int>(edgeIdx.size());
  int v = static_cast<int>(spannedVertices(g, edgeIdx).size());
  int loops = i - v + 1;
  return 6 * loops - 2 * i;
}

}  // namespace

int componentExternalCount(const FeynGraph& g, const std::vector<int>& edgeIdx) {
  std::vector<int> vs = spannedVertices(g, edgeIdx);
  int total = 0;
  for (int v : vs) total += valence(g.typeOf(v));
  return total - 2 * static_cast<int>(edgeIdx.size());
}

FeynGraph componentGraph(const FeynGraph& g, const std::vector<int>& edgeIdx) {
  std::vector<int> vs = spannedVertices(g, edgeIdx);
  std::vector<int> pos(g.vertexCount(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  std::vector<VertexType> types;
  types.reserve(vs.size());
  for (int v : vs) types.push_back(g.typeOf(v));
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(vs.size(), 0);
  for (int e : edgeIdx) {
    auto [a, b] = g.edges()[e];
    edges.emplace_back(pos[a], pos[b]);
    ++degree[pos[a]];
    ++degree[pos[b]];
  }
  // Every incidence of the parent graph that is not an edge of the component
  // (outgoing edges and parent legs alike) becomes an external leg.
  std::vector<int> legs(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    legs[i] = valence(g.typeOf(vs[i])) - degree[i];
  return FeynGraph(std::move(types), std::move(edges), std::move(legs));
}

bool admissibleSubset(const FeynGraph& g, const std::vector<int>& edgeIdx) {
  if (edgeIdx.empty() || edgeIdx.size() >= static_cast<std::size_t>(g.edgeCount())) return false;
  for (const auto& comp : componentsOf(g, edgeIdx)) {
    if (!edgeSetOnePI(g, comp)) return false;
    if (edgeSetSuperficialDegree(g, comp) < 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> divergentSubgraphs(const FeynGraph& g, Parallelism mode) {
  int m = g.edgeCount();
  if (m > 20) throw DomainError("edge-subset scan supports at most 20 edges");
  std::size_t total = (m == 0) ? 0 : ((std::size_t{1} << m) - 1);
  std::vector<char> flag(total + 1, 0);
  // Masks 1 .. 2^m - 2: proper non-empty subsets. Each slot is written by
  // exactly one iteration, so the scan parallelizes cleanly.
  par::forEach(total, mode, [&](std::size_t mask) {
    if (mask == 0 || mask + 1 == (std::size_t{1} << m)) return;
    std::vector<int> idx;
    for (int e = 0; e < m; ++e)
      if (mask & (std::size_t{1} << e)) idx.push_back(e);
    flag[mask] = admissibleSubset(g, idx) ? 1 : 0;
  });
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 1; mask <= total; ++mask) {
    if (!flag[mask]) continue;
    std::vector<int> idx;
    for (int e = 0; e < m; ++e)
      if (mask & (std::size_t{1} << e)) idx.push_back(e);
    out.push_back(std::move(idx));
  }
  return out;
}

std::vector<int> markerBasis(int externalCount) {
  if (externalCount == 2) return {0, 1};
  if (externalCount == 3) return {0};
  throw DomainError("no marker basis for " + std::to_string(externalCount) + " external legs");
}

FeynGraph quotientGraph(const FeynGraph& g, const std::vector<int>& edgeIdx,
                        const std::vector<int>& markers) {
  if (edgeIdx.empty()) throw AdmissibilityError("cannot contract the empty subgraph");
  if (edgeIdx.size() >= static_cast<std::size_t>(g.edgeCount()))
    throw AdmissibilityError("subgraph must be proper: nothing would remain after contraction");
  if (!admissibleSubset(g, edgeIdx))
    throw AdmissibilityError("subgraph has a component that is not 1PI and divergent");
  std::vector<std::vector<int>> comps = componentsOf(g, edgeIdx);
  if (markers.size() != comps.size())
    throw DomainError("need one marker per contracted component");

  int n = g.vertexCount();
  std::vector<int> group(n, -1);  // component index per vertex, -1 if untouched
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : spannedVertices(g, comps[c])) group[v] = static_cast<int>(c);

  std::vector<VertexType> types;
  std::vector<int> legs;
  std::vector<int> pos(n, -1);
  for (int v = 0; v < n; ++v) {
    if (group[v] != -1) continue;
    pos[v] = static_cast<int>(types.size());
    types.push_back(g.typeOf(v));
    legs.push_back(g.legsAt(v));
  }
  std::vector<int> compPos(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int ext = componentExternalCount(g, comps[c]);
    VertexType t;
    if (ext == 3) {
      if (markers[c] != 0) throw DomainError("3-point components carry only marker s0");
      t = VertexType::V3;
    } else if (ext == 2) {
      if (markers[c] != 0 && markers[c] != 1)
        throw DomainError("2-point components carry marker s0 or s1");
      t = markers[c] == 0 ? VertexType::V2S0 : VertexType::V2S1;
    } else {
      throw AdmissibilityError("component with " + std::to_string(ext) +
                               " external legs cannot be contracted");
    }
    compPos[c] = static_cast<int>(types.size());
    types.push_back(t);
    int legSum = 0;
    for (int v : spannedVertices(g, comps[c])) legSum += g.legsAt(v);
    legs.push_back(legSum);
  }
  auto mapped = [&](int v) { return group[v] == -1 ? pos[v] : compPos[group[v]]; };

  std::vector<char> inSubset(g.edgeCount(), 0);
  for (int e : edgeIdx) inSubset[e] = 1;
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.edgeCount(); ++e) {
    if (inSubset[e]) continue;
    auto [a, b] = g.edges()[e];
    int x = mapped(a), y = mapped(b);
    if (x == y) throw DomainError("contraction would create a self-loop");
    edges.emplace_back(x, y);
  }
  return FeynGraph(std::move(types), std::move(edges), std::move(legs));
}

nlohmann::json graphToJson(const FeynGraph& g, int marker) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.vertexCount(); ++v)
    j["vertices"].push_back({{"id", v}, {"type", vertexTypeName(g.typeOf(v))}});
  j["internalEdges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) j["internalEdges"].push_back({a, b});
  j["externalLegs"] = nlohmann::json::array();
  int k = 0;
  for (int v = 0; v < g.vertexCount(); ++v)
    for (int c = 0; c < g.legsAt(v); ++c) j["externalLegs"].push_back({v, k++});
  j["extStructure"] = marker == 1 ? "s1" : "s0";
  return j;
}

std::pair<FeynGraph, int> graphFromJson(const nlohmann::json& j) {
  try {
    std::map<long, int> index;     // file id -> internal vertex index
    std::vector<long> stubs;       // file ids of external-stub vertices
    std::vector<VertexType> types;
    for (const auto& v : j.at("vertices")) {
      long id = v.at("id").get<long>();
      std::string tn = v.at("type").get<std::string>();
      if (tn == "external-stub") {
        stubs.push_back(id);
        continue;
      }
      if (index.count(id)) throw DomainError("duplicate vertex id");
      index[id] = static_cast<int>(types.size());
      types.push_back(vertexTypeFromName(tn));
    }
    std::vector<int> legs(types.size(), 0);
    std::vector<std::pair<int, int>> edges;
    auto isStub = [&](long id) { return std::find(stubs.begin(), stubs.end(), id) != stubs.end(); };
    for (const auto& e : j.at("internalEdges")) {
      long a = e.at(0).get<long>(), b = e.at(1).get<long>();
      if (isStub(a) || isStub(b)) {
        // A stub encodes one external leg at its internal neighbour.
        long inner = isStub(a) ? b : a;
        if (isStub(a) && isStub(b)) throw DomainError("edge joins two external stubs");
        ++legs.at(index.at(inner));
        continue;
      }
      edges.emplace_back(index.at(a), index.at(b));
    }
    if (j.contains("externalLegs"))
      for (const auto& l : j.at("externalLegs")) {
        long v = l.at(0).get<long>();
        if (isStub(v)) continue;  // already counted from its edge
        ++legs.at(index.at(v));
      }
    int marker = 0;
    if (j.contains("extStructure")) {
      std::string s = j.at("extStructure").get<std::string>();
      if (s == "s1")
        marker = 1;
      else if (s != "s0")
        throw DomainError("unknown external structure '" + s + "'");
    }
    return {FeynGraph(std::move(types), std::move(edges), std::move(legs)), marker};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what(), 0);
  }
}

}  // namespace hopfren
