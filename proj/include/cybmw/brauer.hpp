#pragma once

// Labelled Brauer diagrams: perfect matchings of 2n boundary points whose
// strands carry residues mod r, with composition by stacking, loop harvesting
// into the loop parameters th_0..th_{floor(r/2)}, inclusion, conditional
// expectation, the induced trace, and Gram matrices of the diagram basis.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cybmw/error.hpp"
#include "cybmw/matrix.hpp"
#include "cybmw/parallel.hpp"
#include "cybmw/ratfunc.hpp"
#include "cybmw/scalars.hpp"
#include "cybmw/varset.hpp"

namespace cybmw {

// A closed loop has no preferred orientation, so labels l and r - l share the
// parameter index min(l, r - l); indices range over 0..floor(r/2).
int theta_index(int r, long label);

// Number of loop parameters, floor(r/2) + 1.
int theta_count(int r);

class ZrBrauerDiagram {
 public:
  // Endpoints are numbered 0..2n-1: top row left to right, then bottom row
  // left to right.  That numbering is also the canonical endpoint order: each
  // strand is stored oriented away from its smaller endpoint, and a label
  // supplied against that orientation is inverted mod r on construction, so
  // equal diagrams have equal representations.
  //
  // `pairs` lists each strand once as (from, to) with `labels[i]` the residue
  // of strand i oriented from -> to.
  ZrBrauerDiagram(int n, int r, const std::vector<std::pair<int, int>>& pairs,
                  const std::vector<long>& labels);

  static ZrBrauerDiagram identity(int n, int r);
  // Horizontal cap top(i)-top(i+1) and cup bot(i)-bot(i+1), labels 0, all
  // other strands vertical with label 0; 1 <= i <= n-1.
  static ZrBrauerDiagram e_diagram(int n, int r, int i);
  // Vertical diagram with strand top(j) -> bot(pi[j]) (0-based) whose label,
  // oriented downward, is labels[pi[j]]: labels are attached to bottom slots.
  static ZrBrauerDiagram permutation_diagram(int r, const std::vector<int>& pi,
                                             const std::vector<long>& labels);

  int n() const { return n_; }
  int r() const { return r_; }
  int mate(int e) const { return mate_[static_cast<size_t>(e)]; }
  // Label of the strand at e, oriented leaving e; label_from(mate(e)) is its
  // inverse mod r.
  int label_from(int e) const { return lab_[static_cast<size_t>(e)]; }

  // Strands in canonical order: (from, to, label) with from < to, sorted.
  std::vector<std::tuple<int, int, int>> strands() const;

  bool operator==(const ZrBrauerDiagram& o) const {
    return n_ == o.n_ && r_ == o.r_ && mate_ == o.mate_ && lab_ == o.lab_;
  }
  bool operator!=(const ZrBrauerDiagram& o) const { return !(*this == o); }
  bool operator<(const ZrBrauerDiagram& o) const;

  std::string str() const;

 private:
  ZrBrauerDiagram() = default;
  friend std::pair<std::vector<int>, ZrBrauerDiagram> compose_diagrams(
      const ZrBrauerDiagram&, const ZrBrauerDiagram&);
  friend ZrBrauerDiagram include_strand(const ZrBrauerDiagram&);
  friend std::pair<int, ZrBrauerDiagram> close_rightmost(const ZrBrauerDiagram&);
  friend ZrBrauerDiagram flip(const ZrBrauerDiagram&);

  void set_strand(int from, int to, long label);

  int n_ = 0, r_ = 1;
  std::vector<int> mate_;
  std::vector<int> lab_;
};

// Product ab realized by stacking b over a: the product's top row is b's, its
// bottom row is a's.  Open strands concatenate with orientation-consistent
// label sums; closed loops are removed and tallied by parameter index.
// Returns (loop counts m_j indexed by theta_index, residual diagram).
std::pair<std::vector<int>, ZrBrauerDiagram> compose_diagrams(const ZrBrauerDiagram& a,
                                                              const ZrBrauerDiagram& b);

// Adds a vertical strand with label 0 on the right: n -> n+1.
ZrBrauerDiagram include_strand(const ZrBrauerDiagram& d);

// Joins top(n) and bot(n) by a label-0 strand.  If they were already joined
// to each other the closure is a loop: returns (its parameter index, the
// diagram minus that strand); otherwise returns (-1, the rejoined diagram).
std::pair<int, ZrBrauerDiagram> close_rightmost(const ZrBrauerDiagram& d);

// Top-bottom reflection; an involution and an antihomomorphism for
// compose_diagrams, and it preserves the trace.
ZrBrauerDiagram flip(const ZrBrauerDiagram& d);

// All r^n (2n-1)!! diagrams in a deterministic order: matchings by recursive
// pairing of the smallest free endpoint, labels in counting order.
std::vector<ZrBrauerDiagram> enumerate_diagrams(int n, int r);

// Process-wide canonical-diagram intern table; products on four strands touch
// on the order of 10^4 distinct basis diagrams, so elements hold small ids
// instead of diagram copies.
class DiagramTable {
 public:
  static DiagramTable& instance();
  uint32_t intern(const ZrBrauerDiagram& d);
  // The reference stays valid for the life of the process.
  const ZrBrauerDiagram& at(uint32_t id) const;

 private:
  DiagramTable() = default;
  struct Impl;
  Impl& impl() const;
};

// ----------------------------------------------------------------------------
// Linear combinations of diagrams over a coefficient field K carrying the
// loop parameters th_0..th_{floor(r/2)} (th_0 invertible).

template <class K>
struct DiagramElement {
  int n = 0;
  int r = 1;
  std::vector<K> thetas;
  std::map<uint32_t, K> terms;  // intern id -> coefficient, no zeros stored
};

// Loop parameters as the variables th0..th_{floor(r/2)} of the theta ring.
RatFunc symbolic_theta(int r, int j);
std::vector<RatFunc> symbolic_thetas(int r);

template <class K>
DiagramElement<K> element_zero(int n, int r, std::vector<K> thetas) {
  if (static_cast<int>(thetas.size()) != theta_count(r))
    throw Error(Code::InvalidArgument, "expected " + std::to_string(theta_count(r)) +
                                           " loop parameters");
  DiagramElement<K> x;
  x.n = n;
  x.r = r;
  x.thetas = std::move(thetas);
  return x;
}

template <class K>
DiagramElement<K> make_element(const ZrBrauerDiagram& d, const K& coeff,
                               std::vector<K> thetas) {
  DiagramElement<K> x = element_zero<K>(d.n(), d.r(), std::move(thetas));
  if (!k_is_zero(coeff)) x.terms.emplace(DiagramTable::instance().intern(d), coeff);
  return x;
}

namespace detail {

template <class K>
void require_same_algebra(const DiagramElement<K>& x, const DiagramElement<K>& y) {
  if (x.n != y.n || x.r != y.r || !(x.thetas == y.thetas))
    throw Error(Code::ParameterMismatch,
                "elements live in different diagram algebras");
}

template <class K>
void add_term(DiagramElement<K>& x, uint32_t id, const K& c) {
  auto it = x.terms.find(id);
  if (it == x.terms.end()) {
    if (!k_is_zero(c)) x.terms.emplace(id, c);
    return;
  }
  it->second = it->second + c;
  if (k_is_zero(it->second)) x.terms.erase(it);
}

}  // namespace detail

template <class K>
DiagramElement<K> add(const DiagramElement<K>& x, const DiagramElement<K>& y) {
  detail::require_same_algebra(x, y);
  DiagramElement<K> out = x;
  for (const auto& [id, c] : y.terms) detail::add_term(out, id, c);
  return out;
}

template <class K>
DiagramElement<K> scale(const DiagramElement<K>& x, const K& c) {
  DiagramElement<K> out = element_zero<K>(x.n, x.r, x.thetas);
  if (k_is_zero(c)) return out;
  for (const auto& [id, v] : x.terms) out.terms.emplace(id, v * c);
  return out;
}

template <class K>
bool equal(const DiagramElement<K>& x, const DiagramElement<K>& y) {
  detail::require_same_algebra(x, y);
  if (x.terms.size() != y.terms.size()) return false;
  for (const auto& [id, c] : x.terms) {
    auto it = y.terms.find(id);
    if (it == y.terms.end() || !(it->second == c)) return false;
  }
  return true;
}

// Bilinear extension of diagram composition; associative.
template <class K>
DiagramElement<K> multiply(const DiagramElement<K>& x, const DiagramElement<K>& y) {
  detail::require_same_algebra(x, y);
  DiagramElement<K> out = element_zero<K>(x.n, x.r, x.thetas);
  DiagramTable& table = DiagramTable::instance();
  for (const auto& [idx, cx] : x.terms)
    for (const auto& [idy, cy] : y.terms) {
      auto [loops, d] = compose_diagrams(table.at(idx), table.at(idy));
      K c = cx * cy;
      for (size_t j = 0; j < loops.size(); ++j)
        for (int m = 0; m < loops[j]; ++m) c = c * x.thetas[j];
      detail::add_term(out, table.intern(d), c);
    }
  return out;
}

template <class K>
DiagramElement<K> include_element(const DiagramElement<K>& x) {
  DiagramElement<K> out = element_zero<K>(x.n + 1, x.r, x.thetas);
  DiagramTable& table = DiagramTable::instance();
  for (const auto& [id, c] : x.terms)
    out.terms.emplace(table.intern(include_strand(table.at(id))), c);
  return out;
}

// The conditional expectation onto one strand fewer: close the rightmost pair
// with a label-0 strand, harvest a loop into its theta if one forms, and
// divide by th_0.
template <class K>
DiagramElement<K> conditional_expectation(const DiagramElement<K>& x) {
  if (x.n < 1)
    throw Error(Code::InvalidArgument, "conditional expectation needs n >= 1");
  DiagramElement<K> out = element_zero<K>(x.n - 1, x.r, x.thetas);
  DiagramTable& table = DiagramTable::instance();
  const K th0_inv = k_inv(x.thetas[0]);
  for (const auto& [id, c] : x.terms) {
    auto [loop_idx, d] = close_rightmost(table.at(id));
    K v = c * th0_inv;
    if (loop_idx >= 0) v = v * x.thetas[static_cast<size_t>(loop_idx)];
    detail::add_term(out, table.intern(d), v);
  }
  return out;
}

// markov_trace = the composite of the conditional expectations down to zero
// strands; tracial and 1 on the identity diagram.
template <class K>
K markov_trace(const DiagramElement<K>& x) {
  DiagramElement<K> cur = x;
  while (cur.n > 0) cur = conditional_expectation(cur);
  if (cur.terms.empty()) return make_int<K>(x.thetas[0], 0);
  return cur.terms.begin()->second;
}

template <class K>
K diagram_trace(const ZrBrauerDiagram& d, const std::vector<K>& thetas) {
  return markov_trace(make_element(d, make_int<K>(thetas[0], 1), thetas));
}

// Gram matrix of the trace form on the diagram basis, in enumeration order.
template <class K>
Matrix<K> gram_matrix(int n, int r, const std::vector<K>& thetas, int threads = 1) {
  if (static_cast<int>(thetas.size()) != theta_count(r))
    throw Error(Code::InvalidArgument, "expected " + std::to_string(theta_count(r)) +
                                           " loop parameters");
  std::vector<ZrBrauerDiagram> basis = enumerate_diagrams(n, r);
  const int m = static_cast<int>(basis.size());
  Matrix<K> g(m, m, make_int<K>(thetas[0], 0));
  run_indexed(m, threads, [&](int i) {
    for (int j = 0; j < m; ++j) {
      auto [loops, d] = compose_diagrams(basis[static_cast<size_t>(i)],
                                         basis[static_cast<size_t>(j)]);
      K c = diagram_trace(d, thetas);
      for (size_t t = 0; t < loops.size(); ++t)
        for (int mm = 0; mm < loops[t]; ++mm) c = c * thetas[t];
      g.at(i, j) = c;
    }
  });
  return g;
}

}  // namespace cybmw
