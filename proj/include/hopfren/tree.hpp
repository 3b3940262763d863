#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfren/rational.hpp"

namespace hopfren {

// Immutable rooted tree, children kept sorted by canonical key, so structural
// equality is key equality. Text form doubles as the canonical key:
// "o" is a single vertex, "B[x y ...]" a root with child subtrees.
class RootedTree {
 public:
  RootedTree();  // single vertex
  explicit RootedTree(std::vector<RootedTree> children);

  static RootedTree leaf() { return RootedTree(); }
  static RootedTree chain(int n);    // n >= 1 vertices in a line
  static RootedTree corolla(int n);  // root with n-1 leaf children

  int vertexCount() const { return count_; }
  const std::vector<RootedTree>& children() const { return children_; }
  const std::string& key() const { return key_; }

  // omega(v) = vertex count of the subtree rooted at v, preorder over the
  // canonical child order (root first).
  std::vector<int> subtreeWeights() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.key_ == b.key_; }
  friend bool operator<(const RootedTree& a, const RootedTree& b) {
    if (a.count_ != b.count_) return a.count_ < b.count_;
    return a.key_ < b.key_;
  }

 private:
  std::vector<RootedTree> children_;
  int count_;
  std::string key_;
};

// Attach item's root as a new child of host's vertex with the given preorder
// index (0 = root); IndexError when out of range.
RootedTree graft(const RootedTree& host, const RootedTree& item, int vertex);

// Parses the canonical text syntax; ParseError carries the byte position.
RootedTree parseTree(const std::string& text);

// Multiset of rooted trees; the empty forest is the algebra unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);
  static Forest single(const RootedTree& t) { return Forest({t}); }

  bool empty() const { return trees_.empty(); }
  int degree() const;  // total vertex count
  const std::vector<RootedTree>& trees() const { return trees_; }
  Forest merged(const Forest& o) const;  // multiset union = product

  std::string key() const;  // "1" for the empty forest

  friend bool operator==(const Forest& a, const Forest& b) { return a.trees_ == b.trees_; }
  friend bool operator<(const Forest& a, const Forest& b);

 private:
  std::vector<RootedTree> trees_;  // sorted
};

// Rational linear combination of forests; no zero coefficients stored.
class HopfElement {
 public:
  HopfElement() = default;
  static HopfElement unit() { return ofForest(Forest()); }
  static HopfElement ofTree(const RootedTree& t) { return ofForest(Forest::single(t)); }
  static HopfElement ofForest(const Forest& f);

  bool isZero() const { return terms_.empty(); }
  const std::map<Forest, Rational>& terms() const { return terms_; }
  Rational coefficient(const Forest& f) const;

  HopfElement operator-() const;
  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(const HopfElement& a, const HopfElement& b);
  HopfElement scaled(const Rational& c) const;
  void addTerm(const Forest& f, const Rational& c);

  friend bool operator==(const HopfElement& a, const HopfElement& b) = default;
  std::string str() const;

 private:
  std::map<Forest, Rational> terms_;
};

// Sum of (left, right, coefficient) tensor terms over forest pairs.
using TreeTensor = std::map<std::pair<Forest, Forest>, Rational>;

// Admissible-cut coproduct of a single tree, trivial terms included:
// t (x) 1 + 1 (x) t + sum over nonempty admissible cuts pruned (x) trunk.
// An admissible cut is a nonempty edge set with no two edges on one root path.
TreeTensor coproduct(const RootedTree& t);

// Multiplicative extension to forests.
TreeTensor coproduct(const Forest& f);

// Antipode, extended linearly and multiplicatively from the degreewise
// recursion S(t) = -t - sum over cuts S(pruned) * trunk.
HopfElement antipode(const HopfElement& x);

// All rooted trees with n vertices, canonical order; memoized.
const std::vector<RootedTree>& treesOfDegree(int n);
// All forests of total degree n (n = 0 gives the empty forest alone).
std::vector<Forest> forestsOfDegree(int n);

}  // namespace hopfren
