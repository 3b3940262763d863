#include "hopfren/tree.hpp"

#include <algorithm>
#include <sstream>

#include "hopfren/errors.hpp"

namespace hopfren {

RootedTree::RootedTree() : count_(1), key_("o") {}

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.key() < b.key(); });
  count_ = 1;
  for (const auto& c : children_) count_ += c.count_;
  if (children_.empty()) {
    key_ = "o";
  } else {
    std::string k = "B[";
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) k += " ";
      k += children_[i].key_;
    }
    k += "]";
    key_ = std::move(k);
  }
}

RootedTree RootedTree::chain(int n) {
  if (n < 1) throw DomainError("chain needs at least one vertex");
  RootedTree t;
  for (int i = 1; i < n; ++i) t = RootedTree(std::vector<RootedTree>{t});
  return t;
}

RootedTree RootedTree::corolla(int n) {
  if (n < 1) throw DomainError("corolla needs at least one vertex");
  return RootedTree(std::vector<RootedTree>(static_cast<std::size_t>(n - 1)));
}

std::vector<int> RootedTree::subtreeWeights() const {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(count_));
  w.push_back(count_);
  for (const auto& c : children_) {
    auto sub = c.subtreeWeights();
    w.insert(w.end(), sub.begin(), sub.end());
  }
  return w;
}

RootedTree graft(const RootedTree& host, const RootedTree& item, int vertex) {
  if (vertex < 0 || vertex >= host.vertexCount())
    throw IndexError("graft vertex index " + std::to_string(vertex) + " out of range for " +
                     host.key());
  if (vertex == 0) {
    std::vector<RootedTree> kids = host.children();
    kids.push_back(item);
    return RootedTree(std::move(kids));
  }
  int v = vertex - 1;
  std::vector<RootedTree> kids = host.children();
  for (auto& c : kids) {
    if (v < c.vertexCount()) {
      c = graft(c, item, v);
      return RootedTree(std::move(kids));
    }
    v -= c.vertexCount();
  }
  throw IndexError("graft index bookkeeping failure");  // unreachable
}

namespace {

RootedTree parseTreeAt(const std::string& s, std::size_t& i) {
  if (i >= s.size()) throw ParseError("unexpected end of tree text", i);
  if (s[i] == 'o') {
    ++i;
    return RootedTree::leaf();
  }
  if (s[i] == 'B') {
    std::size_t open = i + 1;
    if (open >= s.size() || s[open] != '[') throw ParseError("expected '[' after 'B'", open);
    i = open + 1;
    std::vector<RootedTree> kids;
    for (;;) {
      while (i < s.size() && s[i] == ' ') ++i;
      if (i >= s.size()) throw ParseError("unterminated 'B[' group", open);
      if (s[i] == ']') {
        ++i;
        if (kids.empty()) throw ParseError("'B[]' must contain at least one subtree", open);
        return RootedTree(std::move(kids));
      }
      kids.push_back(parseTreeAt(s, i));
    }
  }
  throw ParseError(std::string("expected 'o' or 'B[', got '") + s[i] + "'", i);
}

}  // namespace

RootedTree parseTree(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  RootedTree t = parseTreeAt(text, i);
  while (i < text.size() && text[i] == ' ') ++i;
  if (i != text.size()) throw ParseError("trailing characters after tree", i);
  return t;
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.key() < b.key(); });
}

int Forest::degree() const {
  int d = 0;
  for (const auto& t : trees_) d += t.vertexCount();
  return d;
}

Forest Forest::merged(const Forest& o) const {
  std::vector<RootedTree> all = trees_;
  all.insert(all.end(), o.trees_.begin(), o.trees_.end());
  return Forest(std::move(all));
}

std::string Forest::key() const {
  if (trees_.empty()) return "1";
  std::string k;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) k += " ";
    k += trees_[i].key();
  }
  return k;
}

bool operator<(const Forest& a, const Forest& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.key() < b.key();
}

HopfElement HopfElement::ofForest(const Forest& f) {
  HopfElement e;
  e.terms_[f] = Rational(1);
  return e;
}

Rational HopfElement::coefficient(const Forest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HopfElement::addTerm(const Forest& f, const Rational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

HopfElement HopfElement::operator-() const {
  HopfElement r;
  for (const auto& [f, c] : terms_) r.terms_[f] = -c;
  return r;
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  for (const auto& [f, c] : o.terms_) addTerm(f, c);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  for (const auto& [f, c] : o.terms_) addTerm(f, -c);
  return *this;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  HopfElement r;
  for (const auto& [fa, ca] : a.terms_)
    for (const auto& [fb, cb] : b.terms_) r.addTerm(fa.merged(fb), ca * cb);
  return r;
}

HopfElement HopfElement::scaled(const Rational& c) const {
  HopfElement r;
  if (c.isZero()) return r;
  for (const auto& [f, v] : terms_) r.terms_[f] = v * c;
  return r;
}

std::string HopfElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (!mag.isOne()) os << mag.str() << " ";
    os << f.key();
  }
  return os.str();
}

namespace {

// All (pruned forest, trunk) pairs over admissible (possibly empty) cuts.
// Cutting a child edge sends that whole subtree to the pruned side; keeping it
// recurses, which is exactly the no-two-edges-on-one-root-path condition.
std::vector<std::pair<Forest, RootedTree>> cutPairs(const RootedTree& t) {
  std::vector<std::pair<std::vector<RootedTree>, std::vector<RootedTree>>> partial = {{{}, {}}};
  for (const auto& child : t.children()) {
    std::vector<std::pair<std::vector<RootedTree>, std::vector<RootedTree>>> next;
    auto sub = cutPairs(child);
    for (const auto& [pruned, keptKids] : partial) {
      // Cut the edge to this child.
      auto cutCase = pruned;
      cutCase.push_back(child);
      next.emplace_back(std::move(cutCase), keptKids);
      // Keep the edge, recurse into the child.
      for (const auto& [subPruned, subTrunk] : sub) {
        auto p = pruned;
        p.insert(p.end(), subPruned.trees().begin(), subPruned.trees().end());
        auto k = keptKids;
        k.push_back(subTrunk);
        next.emplace_back(std::move(p), std::move(k));
      }
    }
    partial = std::move(next);
  }
  std::vector<std::pair<Forest, RootedTree>> out;
  out.reserve(partial.size());
  for (auto& [pruned, keptKids] : partial)
    out.emplace_back(Forest(std::move(pruned)), RootedTree(std::move(keptKids)));
  return out;
}

}  // namespace

TreeTensor coproduct(const RootedTree& t) {
  TreeTensor cp;
  cp[{Forest::single(t), Forest()}] = Rational(1);  // t (x) 1
  for (const auto& [pruned, trunk] : cutPairs(t)) {
    auto key = std::make_pair(pruned, Forest::single(trunk));
    auto [it, inserted] = cp.emplace(key, Rational(1));
    if (!inserted) it->second += Rational(1);
  }
  return cp;
}

TreeTensor coproduct(const Forest& f) {
  TreeTensor acc;
  acc[{Forest(), Forest()}] = Rational(1);
  for (const auto& t : f.trees()) {
    TreeTensor factor = coproduct(t);
    TreeTensor next;
    for (const auto& [pa, ca] : acc)
      for (const auto& [pf, cf] : factor) {
        auto key = std::make_pair(pa.first.merged(pf.first), pa.second.merged(pf.second));
        auto [it, inserted] = next.emplace(key, ca * cf);
        if (!inserted) it->second += ca * cf;
      }
    acc = std::move(next);
  }
  return acc;
}

namespace {

const HopfElement& antipodeTree(const RootedTree& t) {
  static std::map<std::string, HopfElement> memo;
  auto it = memo.find(t.key());
  if (it != memo.end()) return it->second;
  HopfElement s = -HopfElement::ofTree(t);
  for (const auto& [pruned, trunk] : cutPairs(t)) {
    if (pruned.empty()) continue;  // the 1 (x) t term is not part of the recursion
    // S(pruned) * trunk, with S multiplicative over the pruned forest.
    HopfElement sp = HopfElement::unit();
    for (const auto& p : pruned.trees()) sp = sp * antipodeTree(p);
    s -= sp * HopfElement::ofTree(trunk);
  }
  return memo.emplace(t.key(), std::move(s)).first->second;
}

}  // namespace

HopfElement antipode(const HopfElement& x) {
  HopfElement out;
  for (const auto& [f, c] : x.terms()) {
    HopfElement term = HopfElement::unit();
    for (const auto& t : f.trees()) term = term * antipodeTree(t);
    out += term.scaled(c);
  }
  return out;
}

namespace {

// Trees of degree <= bound in a single indexed list, (degree, key) order.
std::vector<RootedTree> indexedTrees(int bound) {
  std::vector<RootedTree> all;
  for (int n = 1; n <= bound; ++n) {
    const auto& tn = treesOfDegree(n);
    all.insert(all.end(), tn.begin(), tn.end());
  }
  return all;
}

void forestsRec(const std::vector<RootedTree>& pool, int remaining, std::size_t maxIdx,
                std::vector<RootedTree>& current, std::vector<Forest>& out) {
  if (remaining == 0) {
    out.push_back(Forest(current));
    return;
  }
  for (std::size_t i = 0; i < maxIdx; ++i) {
    // pool is (degree, key)-sorted; non-increasing index sequences enumerate
    // each multiset once.
    if (pool[i].vertexCount() > remaining) break;
    current.push_back(pool[i]);
    forestsRec(pool, remaining - pool[i].vertexCount(), i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<RootedTree>& treesOfDegree(int n) {
  static std::map<int, std::vector<RootedTree>> memo;
  if (n < 1) throw DomainError("trees have at least one vertex");
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<RootedTree> out;
  for (const auto& f : forestsOfDegree(n - 1)) out.push_back(RootedTree(f.trees()));
  std::sort(out.begin(), out.end());
  return memo.emplace(n, std::move(out)).first->second;
}

std::vector<Forest> forestsOfDegree(int n) {
  if (n < 0) throw DomainError("negative forest degree");
  if (n == 0) return {Forest()};
  std::vector<RootedTree> pool = indexedTrees(n);
  std::vector<Forest> out;
  std::vector<RootedTree> current;
  forestsRec(pool, n, pool.size(), current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hopfren
