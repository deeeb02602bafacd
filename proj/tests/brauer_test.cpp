#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cybmw/brauer.hpp"
#include "cybmw/multipartition.hpp"
#include "cybmw/specialize.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cybmw;
using cybmw_test::thrown_code;

namespace {

using Elem = DiagramElement<RatFunc>;

Elem one_diagram(const ZrBrauerDiagram& d) {
  return make_element(d, RatFunc::parse(theta_vars(d.r()), "1"), symbolic_thetas(d.r()));
}

// Independent trace oracle: close all strands at once with label-0 arcs
// top(i)-bot(i), walk the resulting closed curves directly, and divide by
// th_0^n.  The production code instead peels one strand at a time.
RatFunc trace_oracle(const ZrBrauerDiagram& d, const std::vector<RatFunc>& thetas) {
  const int n = d.n();
  RatFunc acc = make_int<RatFunc>(thetas[0], 1);
  std::vector<char> seen(static_cast<size_t>(2 * n), 0);
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    long label = 0;
    int e = s;
    do {
      // diagram strand e -> mate(e), then the closure arc to the other row.
      seen[static_cast<size_t>(e)] = 1;
      int f = d.mate(e);
      seen[static_cast<size_t>(f)] = 1;
      label += d.label_from(e);
      e = f < n ? f + n : f - n;
    } while (e != s);
    acc = acc * thetas[static_cast<size_t>(theta_index(d.r(), label))];
  }
  for (int i = 0; i < n; ++i) acc = acc / thetas[0];
  return acc;
}

// Independent wreath-product oracle for vertical diagrams: elements (v, pi)
// with labels v in (Z_r)^n attached to bottom slots multiply as
// (v, pi)(w, sigma) = (v + pi.w, pi o sigma) with (pi.w)_i = w_{pi^-1(i)}.
struct Wreath {
  std::vector<long> v;
  std::vector<int> pi;
};

Wreath wreath_mul(int r, const Wreath& a, const Wreath& b) {
  const size_t n = a.pi.size();
  Wreath out;
  out.v.resize(n);
  out.pi.resize(n);
  std::vector<int> inv(n);
  for (size_t i = 0; i < n; ++i) inv[static_cast<size_t>(a.pi[i])] = static_cast<int>(i);
  for (size_t i = 0; i < n; ++i) {
    out.pi[i] = a.pi[static_cast<size_t>(b.pi[i])];
    out.v[i] = (a.v[i] + b.v[static_cast<size_t>(inv[i])]) % r;
  }
  return out;
}

ZrBrauerDiagram wreath_diagram(int r, const Wreath& w) {
  return ZrBrauerDiagram::permutation_diagram(r, w.pi, w.v);
}

ZrBrauerDiagram random_diagram(Rng& rng, int n, int r) {
  std::vector<int> free_ends;
  for (int e = 0; e < 2 * n; ++e) free_ends.push_back(e);
  std::vector<std::pair<int, int>> pairs;
  std::vector<long> labels;
  while (!free_ends.empty()) {
    int from = free_ends.front();
    free_ends.erase(free_ends.begin());
    size_t pick = static_cast<size_t>(rng.raw(free_ends.size()));
    int to = free_ends[pick];
    free_ends.erase(free_ends.begin() + static_cast<long>(pick));
    pairs.emplace_back(from, to);
    labels.push_back(static_cast<long>(rng.raw(static_cast<uint64_t>(r))));
  }
  return ZrBrauerDiagram(n, r, pairs, labels);
}

Wreath random_wreath(Rng& rng, int n, int r) {
  Wreath w;
  for (int i = 0; i < n; ++i) {
    w.pi.push_back(i);
    w.v.push_back(static_cast<long>(rng.raw(static_cast<uint64_t>(r))));
  }
  for (int i = n - 1; i > 0; --i)
    std::swap(w.pi[static_cast<size_t>(i)],
              w.pi[static_cast<size_t>(rng.raw(static_cast<uint64_t>(i + 1)))]);
  return w;
}

Int double_factorial_odd(int n) {  // (2n-1)!!
  Int out = 1;
  for (int k = 1; k <= 2 * n - 1; k += 2) out *= k;
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("brauer");

TEST_CASE("loop parameter indexing folds a label with its inverse") {
  CHECK(theta_count(1) == 1);
  CHECK(theta_count(2) == 2);
  CHECK(theta_count(3) == 2);
  CHECK(theta_count(4) == 3);
  CHECK(theta_index(1, 0) == 0);
  CHECK(theta_index(3, 1) == 1);
  CHECK(theta_index(3, 2) == 1);  // label 2 = -1 mod 3
  CHECK(theta_index(3, -1) == 1);
  CHECK(theta_index(4, 2) == 2);
  CHECK(theta_index(4, 3) == 1);
  CHECK(theta_index(2, 7) == 1);
  CHECK(theta_index(5, 0) == 0);
}

TEST_CASE("canonical form inverts labels given against the endpoint order") {
  // bot(1) -> top(1) labeled k is stored as top(1) -> bot(1) labeled -k.
  ZrBrauerDiagram given(1, 3, {{1, 0}}, {1});
  ZrBrauerDiagram canonical(1, 3, {{0, 1}}, {2});
  CHECK(given == canonical);
  CHECK(given.label_from(0) == 2);
  CHECK(given.label_from(1) == 1);

  // Re-feeding the canonical strand list reproduces the diagram.
  std::vector<std::pair<int, int>> pairs;
  std::vector<long> labels;
  for (auto [from, to, label] : given.strands()) {
    pairs.emplace_back(from, to);
    labels.push_back(label);
  }
  CHECK(ZrBrauerDiagram(1, 3, pairs, labels) == given);

  CHECK(ZrBrauerDiagram::identity(2, 3).strands() ==
        std::vector<std::tuple<int, int, int>>{{0, 2, 0}, {1, 3, 0}});
  CHECK(ZrBrauerDiagram(2, 5, {{2, 0}, {3, 1}}, {-7, 5}) ==
        ZrBrauerDiagram(2, 5, {{0, 2}, {1, 3}}, {2, 0}));
}

TEST_CASE("invalid matchings are rejected") {
  CHECK(thrown_code([] { ZrBrauerDiagram(1, 3, {{0, 0}}, {0}); }) == Code::InvalidMatching);
  CHECK(thrown_code([] { ZrBrauerDiagram(1, 3, {{0, 2}}, {0}); }) == Code::InvalidMatching);
  CHECK(thrown_code([] { ZrBrauerDiagram(2, 3, {{0, 1}, {1, 2}}, {0, 0}); }) ==
        Code::InvalidMatching);
  CHECK(thrown_code([] { ZrBrauerDiagram(2, 3, {{0, 1}}, {0}); }) == Code::InvalidMatching);
  CHECK(thrown_code([] { ZrBrauerDiagram(1, 0, {{0, 1}}, {0}); }) == Code::InvalidArgument);
  CHECK(thrown_code([] { ZrBrauerDiagram::e_diagram(2, 2, 2); }) == Code::IndexOutOfRange);
}

TEST_CASE("identity composes as a two-sided unit") {
  Rng rng(66001u);
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      ZrBrauerDiagram id = ZrBrauerDiagram::identity(n, r);
      for (int trial = 0; trial < 5; ++trial) {
        ZrBrauerDiagram d = random_diagram(rng, n, r);
        auto [l1, c1] = compose_diagrams(id, d);
        auto [l2, c2] = compose_diagrams(d, id);
        CHECK(c1 == d);
        CHECK(c2 == d);
        CHECK(std::count(l1.begin(), l1.end(), 0) == static_cast<long>(l1.size()));
        CHECK(std::count(l2.begin(), l2.end(), 0) == static_cast<long>(l2.size()));
      }
    }
}

TEST_CASE("cap-cup diagram squares to a loop times itself") {
  ZrBrauerDiagram e = ZrBrauerDiagram::e_diagram(2, 2, 1);
  auto [loops, c] = compose_diagrams(e, e);
  CHECK(c == e);
  CHECK(loops == std::vector<int>{1, 0});

  // One-strand label arithmetic: labels add along vertical concatenation.
  ZrBrauerDiagram d(1, 3, {{0, 1}}, {1});
  auto [l1, dd] = compose_diagrams(d, d);
  CHECK(dd == ZrBrauerDiagram(1, 3, {{0, 1}}, {2}));
  CHECK(l1 == std::vector<int>{0, 0});
  auto [l2, ddd] = compose_diagrams(dd, d);
  CHECK(ddd == ZrBrauerDiagram::identity(1, 3));
  CHECK(l2 == std::vector<int>{0, 0});
}

TEST_CASE("composition matches the wreath product on vertical diagrams") {
  // Hand example: n=2, r=3.  a = (v=(1,2), pi=transposition), b = (w=(2,0),
  // sigma=identity): a b = (v + pi.w, pi), pi.w = (0, 2).
  Wreath a{{1, 2}, {1, 0}};
  Wreath b{{2, 0}, {0, 1}};
  Wreath ab = wreath_mul(3, a, b);
  CHECK(ab.pi == std::vector<int>{1, 0});
  CHECK(ab.v == std::vector<long>{1, 1});
  auto [loops, c] = compose_diagrams(wreath_diagram(3, a), wreath_diagram(3, b));
  CHECK(std::count(loops.begin(), loops.end(), 0) == static_cast<long>(loops.size()));
  CHECK(c == wreath_diagram(3, ab));

  Rng rng(66002u);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.raw(4));
    int r = 1 + static_cast<int>(rng.raw(3));
    Wreath x = random_wreath(rng, n, r);
    Wreath y = random_wreath(rng, n, r);
    auto [l, z] = compose_diagrams(wreath_diagram(r, x), wreath_diagram(r, y));
    CHECK(std::count(l.begin(), l.end(), 0) == static_cast<long>(l.size()));
    CHECK(z == wreath_diagram(r, wreath_mul(r, x, y)));
  }
}

TEST_CASE("bilinear product is associative on random triples") {
  Rng rng(66003u);
  int checked = 0;
  while (checked < 200) {
    int n = 1 + static_cast<int>(rng.raw(4));
    int r = 1 + static_cast<int>(rng.raw(3));
    Elem x = one_diagram(random_diagram(rng, n, r));
    Elem y = one_diagram(random_diagram(rng, n, r));
    Elem z = one_diagram(random_diagram(rng, n, r));
    CHECK(equal(multiply(multiply(x, y), z), multiply(x, multiply(y, z))));
    ++checked;
  }
}

TEST_CASE("element arithmetic keeps invariants") {
  auto th = symbolic_thetas(2);
  auto v = theta_vars(2);
  ZrBrauerDiagram d = ZrBrauerDiagram::identity(2, 2);
  ZrBrauerDiagram e = ZrBrauerDiagram::e_diagram(2, 2, 1);
  Elem x = add(make_element(d, RatFunc::parse(v, "th0"), th),
               make_element(e, RatFunc::parse(v, "2"), th));
  CHECK(x.terms.size() == 2);
  // Cancellation removes the stored term entirely.
  Elem cancel = add(x, make_element(d, RatFunc::parse(v, "-th0"), th));
  CHECK(cancel.terms.size() == 1);
  CHECK(equal(scale(x, RatFunc::parse(v, "0")), element_zero<RatFunc>(2, 2, th)));
  CHECK(equal(multiply(x, element_zero<RatFunc>(2, 2, th)), element_zero<RatFunc>(2, 2, th)));

  // E * E = th0 E at the element level.
  Elem ee = multiply(make_element(e, RatFunc::parse(v, "1"), th),
                     make_element(e, RatFunc::parse(v, "1"), th));
  CHECK(equal(ee, make_element(e, RatFunc::parse(v, "th0"), th)));

  CHECK(thrown_code([&] {
          multiply(one_diagram(ZrBrauerDiagram::identity(2, 2)),
                   one_diagram(ZrBrauerDiagram::identity(3, 2)));
        }) == Code::ParameterMismatch);
  CHECK(thrown_code([&] { element_zero<RatFunc>(2, 4, th); }) == Code::InvalidArgument);
}

TEST_CASE("inclusion and conditional expectation invert each other") {
  Rng rng(66004u);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng.raw(3));
    int r = 1 + static_cast<int>(rng.raw(3));
    Elem x = one_diagram(random_diagram(rng, n, r));
    CHECK(equal(conditional_expectation(include_element(x)), x));
  }

  // Closing a single labelled strand leaves the scalar th0^-1 th_min(k, r-k).
  for (int r = 1; r <= 4; ++r)
    for (long k = 0; k < r; ++k) {
      auto th = symbolic_thetas(r);
      Elem x = one_diagram(ZrBrauerDiagram(1, r, {{0, 1}}, {k}));
      RatFunc expect = th[static_cast<size_t>(theta_index(r, k))] / th[0];
      CHECK(markov_trace(x) == expect);
    }
}

TEST_CASE("conditional expectation is a bimodule map") {
  Rng rng(66005u);
  int checked = 0;
  while (checked < 100) {
    int n = 2 + static_cast<int>(rng.raw(2));  // n = 2 or 3
    int r = 1 + static_cast<int>(rng.raw(3));
    Elem a = one_diagram(random_diagram(rng, n - 1, r));
    Elem b = one_diagram(random_diagram(rng, n - 1, r));
    Elem x = one_diagram(random_diagram(rng, n, r));
    Elem lhs = conditional_expectation(
        multiply(multiply(include_element(a), x), include_element(b)));
    Elem rhs = multiply(multiply(a, conditional_expectation(x)), b);
    CHECK(equal(lhs, rhs));
    ++checked;
  }
}

TEST_CASE("markov trace is unital, tracial, and matches the closure oracle") {
  for (int r = 1; r <= 3; ++r) {
    auto th = symbolic_thetas(r);
    for (int n = 0; n <= 3; ++n) {
      RatFunc one = make_int<RatFunc>(th[0], 1);
      CHECK(markov_trace(make_element(ZrBrauerDiagram::identity(n, r), one, th)) == one);
    }
  }
  {
    auto th = symbolic_thetas(2);
    CHECK(markov_trace(one_diagram(ZrBrauerDiagram::e_diagram(2, 2, 1))) ==
          RatFunc::parse(theta_vars(2), "th0^-1"));
  }

  // Trace of every basis diagram agrees with the simultaneous-closure oracle.
  for (int r = 1; r <= 3; ++r) {
    auto th = symbolic_thetas(r);
    for (int n = 0; n <= 3; ++n)
      for (const auto& d : enumerate_diagrams(n, r))
        CHECK(diagram_trace(d, th) == trace_oracle(d, th));
  }
  {
    Rng rng(66006u);
    auto th = symbolic_thetas(3);
    for (int trial = 0; trial < 25; ++trial) {
      ZrBrauerDiagram d = random_diagram(rng, 4, 3);
      CHECK(diagram_trace(d, th) == trace_oracle(d, th));
    }
  }

  Rng rng(66007u);
  int checked = 0;
  while (checked < 500) {
    int n = 1 + static_cast<int>(rng.raw(4));
    int r = 1 + static_cast<int>(rng.raw(3));
    Elem x = one_diagram(random_diagram(rng, n, r));
    Elem y = one_diagram(random_diagram(rng, n, r));
    CHECK(markov_trace(multiply(x, y)) == markov_trace(multiply(y, x)));
    ++checked;
  }
}

TEST_CASE("cap-cup diagrams satisfy the exchange relation with scalar one") {
  for (int n = 3; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int i = 1; i < n; ++i)
        for (int j : {i - 1, i + 1}) {
          if (j < 1 || j >= n) continue;
          Elem ei = one_diagram(ZrBrauerDiagram::e_diagram(n, r, i));
          Elem ej = one_diagram(ZrBrauerDiagram::e_diagram(n, r, j));
          CHECK(equal(multiply(multiply(ei, ej), ei), ei));
        }
}

TEST_CASE("enumeration count and dimension identity") {
  CHECK(enumerate_diagrams(2, 2).size() == 12);
  CHECK(enumerate_diagrams(3, 1).size() == 15);
  for (int n = 0; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      auto all = enumerate_diagrams(n, r);
      Int expect = double_factorial_odd(n);
      for (int i = 0; i < n; ++i) expect *= r;
      CHECK(Int(all.size()) == expect);
      std::set<ZrBrauerDiagram> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
      // Same count as the square-sum of up-down tableau numbers per shape.
      auto [tableaux_side, closed_form] = dimension_identity(n, r);
      CHECK(tableaux_side == expect);
      CHECK(closed_form == expect);
    }
}

TEST_CASE("flip is a trace-preserving antiautomorphism") {
  CHECK(flip(ZrBrauerDiagram::identity(3, 3)) == ZrBrauerDiagram::identity(3, 3));
  CHECK(flip(ZrBrauerDiagram::e_diagram(3, 2, 2)) == ZrBrauerDiagram::e_diagram(3, 2, 2));
  ZrBrauerDiagram d(1, 3, {{0, 1}}, {1});
  // Reflection swaps the roles of the endpoints, inverting the stored label.
  CHECK(flip(d) == ZrBrauerDiagram(1, 3, {{0, 1}}, {2}));

  Rng rng(66008u);
  auto th3 = symbolic_thetas(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.raw(4));
    int r = 1 + static_cast<int>(rng.raw(3));
    ZrBrauerDiagram a = random_diagram(rng, n, r);
    ZrBrauerDiagram b = random_diagram(rng, n, r);
    CHECK(flip(flip(a)) == a);
    auto [l1, ab] = compose_diagrams(a, b);
    auto [l2, fba] = compose_diagrams(flip(b), flip(a));
    CHECK(l1 == l2);
    CHECK(flip(ab) == fba);
    auto th = symbolic_thetas(r);
    CHECK(diagram_trace(flip(a), th) == diagram_trace(a, th));
  }
}

TEST_CASE("gram matrix of the trace form is symmetric and nondegenerate") {
  Rng rng(66009u);
  for (int r : {2, 3}) {
    std::vector<Rat> th;
    for (int j = 0; j < theta_count(r); ++j) th.push_back(random_scalar<Rat>(rng));
    Matrix<Rat> g = gram_matrix(2, r, th);
    const int m = r * r * 3;
    CHECK(g.rows() == m);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) CHECK(g.at(i, j) == g.at(j, i));
    CHECK(!k_is_zero(g.determinant()));
  }
}

TEST_CASE("interning is stable and printing is canonical") {
  ZrBrauerDiagram e = ZrBrauerDiagram::e_diagram(2, 3, 1);
  uint32_t id1 = DiagramTable::instance().intern(e);
  uint32_t id2 = DiagramTable::instance().intern(ZrBrauerDiagram::e_diagram(2, 3, 1));
  CHECK(id1 == id2);
  CHECK(DiagramTable::instance().at(id1) == e);
  CHECK(thrown_code([] { DiagramTable::instance().at(0xffffffffu); }) ==
        Code::IndexOutOfRange);

  CHECK(ZrBrauerDiagram::identity(2, 3).str() == "{t1>b1[0] t2>b2[0]}");
  CHECK(ZrBrauerDiagram(1, 3, {{1, 0}}, {1}).str() == "{t1>b1[2]}");
}

TEST_SUITE_END();
