#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cybmw/ground.hpp"

namespace cybmw {

// Partition: weakly decreasing sequence of positive row lengths, no padding.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);

// r-tuple of partitions (Young diagrams), the vertices of the branching graph.
struct Multipartition {
  std::vector<Partition> comp;

  explicit Multipartition(int r) : comp(static_cast<size_t>(r)) {
    if (r < 1) throw Error(Code::InvalidArgument, "multipartition needs at least one component");
  }
  explicit Multipartition(std::vector<Partition> parts);

  int r() const { return static_cast<int>(comp.size()); }
  long size() const;
  bool empty() const { return size() == 0; }

  bool operator==(const Multipartition& o) const { return comp == o.comp; }
  bool operator!=(const Multipartition& o) const { return comp != o.comp; }
  // Canonical order: total size ascending, then component by component with
  // partitions compared reverse-lexicographically (larger rows first).
  bool operator<(const Multipartition& o) const;

  std::string str() const;  // e.g. [[3,1],[]]
};

// Box position within a multipartition: component j, row x, column y (1-based).
struct Node {
  int j = 1, x = 1, y = 1;
  auto operator<=>(const Node&) const = default;
  std::string str() const {
    return "(" + std::to_string(j) + "," + std::to_string(x) + "," + std::to_string(y) + ")";
  }
};

// All positions where a box may be appended / removed, sorted by (j, x, y).
std::vector<Node> addable_nodes(const Multipartition& lam);
std::vector<Node> removable_nodes(const Multipartition& lam);

Multipartition add_node(const Multipartition& lam, const Node& n);     // throws NodeNotIncident
Multipartition remove_node(const Multipartition& lam, const Node& n);  // throws NodeNotIncident

// True when the two shapes differ by adding or removing exactly one box.
bool differ_by_one_node(const Multipartition& a, const Multipartition& b);

// The unique node whose addition to (or removal from) `from` yields `to`.
Node connecting_node(const Multipartition& from, const Multipartition& to);

// Multiplicative content u_j q^(2(y-x)).
template <class K>
K content_value(const Params<K>& p, const Node& n) {
  if (n.j < 1 || n.j > p.r()) throw Error(Code::IndexOutOfRange, "node component out of range");
  return p.u()[static_cast<size_t>(n.j - 1)] * k_pow(p.q(), 2L * (n.y - n.x));
}

// b(alpha, lambda): the content for an addable node, its inverse for a
// removable one.
template <class K>
K b_value(const Params<K>& p, const Node& n, const Multipartition& lam) {
  for (const Node& a : addable_nodes(lam))
    if (a == n) return content_value(p, n);
  for (const Node& rm : removable_nodes(lam))
    if (rm == n) return k_inv(content_value(p, n));
  throw Error(Code::NodeNotIncident, "node " + n.str() + " is neither addable nor removable for " + lam.str());
}

// Walk through the branching graph: shapes[0] is empty and consecutive shapes
// differ by one box.
struct UpDownTableau {
  std::vector<Multipartition> shapes;

  explicit UpDownTableau(std::vector<Multipartition> s);

  int length() const { return static_cast<int>(shapes.size()) - 1; }
  const Multipartition& shape() const { return shapes.back(); }

  // Step k (1..length): the node added (+1) or removed (-1) between
  // shapes[k-1] and shapes[k].
  std::pair<Node, int> step(int k) const;

  bool operator==(const UpDownTableau& o) const { return shapes == o.shapes; }
  bool operator<(const UpDownTableau& o) const;

  std::string str() const;
};

// b(k, T): content of the step-k node when added, its inverse when removed.
template <class K>
K tableau_step_b(const Params<K>& p, const UpDownTableau& t, int k) {
  auto [node, dir] = t.step(k);
  K c = content_value(p, node);
  return dir > 0 ? c : k_inv(c);
}

// Levels Gamma_0..Gamma_n with the edges between consecutive levels; a pair
// (i, k) in edges[m] connects levels[m][i] to levels[m+1][k].
struct BranchingGraph {
  std::vector<std::vector<Multipartition>> levels;
  std::vector<std::vector<std::pair<int, int>>> edges;
};

BranchingGraph branching_graph(int n, int r);

// Gamma_n: total size <= n and congruent to n mod 2, canonically ordered.
std::vector<Multipartition> gamma_level(int n, int r);

std::vector<UpDownTableau> enumerate_tableaux(int n, int r);
std::vector<UpDownTableau> enumerate_tableaux(int n, const Multipartition& lam);

// Number of length-n up-down tableaux per end shape, by dynamic programming
// over the branching graph.
std::map<Multipartition, Int> count_tableaux_level(int n, int r);
Int count_tableaux(int n, const Multipartition& lam);  // throws ShapeNotInLevel

// (sum of squared tableau counts over Gamma_n, r^n (2n-1)!!).
std::pair<Int, Int> dimension_identity(int n, int r);

// ASCII rendering, one row of '#' per partition row, components labelled.
std::string ascii_diagram(const Multipartition& lam);

}  // namespace cybmw
