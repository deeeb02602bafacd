// Acceptance harness.  Each numbered battery prints exactly one line,
//   criterion N: PASS (...)   or   criterion N: FAIL (...),
// and the exit status reports the conjunction.  Run with a single argument
// 1..9 for one battery, or with no arguments for all of them.
//
// Every cap appearing below (ranks, levels, windows, trial counts, seeds) is
// pinned here on purpose so the batteries cannot drift.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "cybmw/brauer.hpp"
#include "cybmw/ground.hpp"
#include "cybmw/multipartition.hpp"
#include "cybmw/specialize.hpp"
#include "cybmw/w2.hpp"
#include "cybmw/weights.hpp"

using namespace cybmw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string clip(const std::string& s) {
  return s.size() <= 96 ? s : s.substr(0, 96) + "...";
}

// Records the first failure; later ones only flip the flag.
void fail(Outcome& out, const std::string& what) {
  if (out.pass) out.detail = what;
  out.pass = false;
}

void take_checks(Outcome& out, const std::vector<Check>& cs, int& counted) {
  for (const Check& c : cs) {
    ++counted;
    if (!c.pass) fail(out, c.name + (c.residual.empty() ? "" : ": " + clip(c.residual)));
  }
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

// 1. Square sums of path counts equal r^n (2n-1)!! for r <= 3, n <= 5, and the
//    diagram enumeration has the same cardinality for n <= 4.
Outcome criterion1() {
  Outcome out;
  int points = 0;
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      Int expect(1);
      for (int i = 0; i < n; ++i) expect *= Int(r) * Int(2 * i + 1);
      auto [paths, closed] = dimension_identity(n, r);
      ++points;
      if (!(paths == expect && closed == expect))
        fail(out, "square-sum mismatch at n=" + std::to_string(n) + ", r=" + std::to_string(r));
      if (n <= 4) {
        ++points;
        if (Int(static_cast<long>(enumerate_diagrams(n, r).size())) != expect)
          fail(out,
               "diagram count mismatch at n=" + std::to_string(n) + ", r=" + std::to_string(r));
      }
    }
  if (out.pass)
    out.detail = std::to_string(points) + " exact integer comparisons across r <= 3";
  return out;
}

// 2. The full two-strand defining-relation battery: symbolic for r <= 3,
//    20 seeded rational trials each for r = 4, 5.
Outcome criterion2() {
  Outcome out;
  int counted = 0;
  for (int r = 1; r <= 3; ++r) {
    Params<RatFunc> p = symbolic_params(r);
    // The denominator-free expansion of the downward-recursed deltas grows
    // double-exponentially in the index once r >= 3, so the tested moment
    // window narrows there; the relation battery itself is complete for every
    // rank, and negative moments reappear below through the rational trials.
    long lo = r <= 2 ? -5 : -1;
    take_checks(out, w2_verify(p, lo, 5), counted);
  }
  for (int r = 4; r <= 5; ++r) {
    Rng rng(4242u + static_cast<uint64_t>(r));
    for (int t = 0; t < 20; ++t) {
      Params<Rat> p = specialized_params(r, sample_parameters<Rat>(rng, r));
      take_checks(out, w2_verify(p, -5, 5), counted);
    }
  }
  if (out.pass)
    out.detail = std::to_string(counted) +
                 " relation checks (symbolic r <= 3, 20 seeded trials each at r = 4, 5)";
  return out;
}

// 3. Parameters built from the residue closed forms satisfy both admissibility
//    formulations, and the unitriangular solve reproduces delta_1..delta_{r-1}.
Outcome criterion3() {
  Outcome out;
  int counted = 0;
  auto triangular = [&](const auto& p) {
    auto tri = solve_deltas_from_admissibility(p.rho(), p.q(), p.signed_elem());
    for (int j = 1; j <= p.r() - 1; ++j) {
      ++counted;
      if (!k_is_zero(tri[static_cast<size_t>(j - 1)] - delta_closed_form(p, j)))
        fail(out, "triangular solve disagrees with closed form at delta_" + std::to_string(j) +
                      " (r=" + std::to_string(p.r()) + ")");
    }
  };
  for (int r = 1; r <= 3; ++r) {
    Params<RatFunc> p = symbolic_params(r);
    // Symbolic deltas below index -2 are not expandable at rank 3 (see the
    // growth note in criterion 2); the missing window entries are covered
    // exactly at rational points below.
    long lo = r <= 2 ? -r : -2;
    take_checks(out, check_weak_admissibility(p, lo, r), counted);
    take_checks(out, check_wilcox_yu(p, r, 2 * r), counted);
    triangular(p);
  }
  Rng rng(90021u);
  for (int t = 0; t < 3; ++t) {
    Params<Rat> p = specialized_params(3, sample_parameters<Rat>(rng, 3));
    take_checks(out, check_weak_admissibility(p, -3, 3), counted);
    take_checks(out, check_wilcox_yu(p, 3, 6), counted);
    triangular(p);
  }
  if (out.pass)
    out.detail = std::to_string(counted) +
                 " admissibility and triangular-solve checks (symbolic plus rational window)";
  return out;
}

// 4. Three independent constructions of the delta sequence agree for
//    0 <= a <= 8, r <= 3; the downward recursion matches the module scalars of
//    E Y^-a E for a <= 5, r <= 2.
Outcome criterion4() {
  Outcome out;
  int counted = 0;
  for (int r = 1; r <= 3; ++r) {
    Params<RatFunc> p = symbolic_params(r);
    for (long a = 0; a <= 8; ++a) {
      RatFunc closed = delta_closed_form(p, a);
      ++counted;
      if (!k_is_zero(closed - delta_via_mu(p, a)))
        fail(out, "series coefficient differs from closed form at a=" + std::to_string(a) +
                      " (r=" + std::to_string(r) + ")");
      if (a >= r) {
        ++counted;
        if (!k_is_zero(closed - delta_forward_recursion(p, a)))
          fail(out, "forward recursion differs from closed form at a=" + std::to_string(a) +
                        " (r=" + std::to_string(r) + ")");
      }
    }
  }
  for (int r = 1; r <= 2; ++r) {
    Params<RatFunc> p = symbolic_params(r);
    W2Rep<RatFunc> rep = build_w2_rep(p);
    for (long a = 1; a <= 5; ++a) {
      Matrix<RatFunc> yp = y_power(p, -a);
      RatFunc dm = p.delta(-a);  // defined by the downward recursion
      bool ok = true;
      for (int i = 0; i < r && ok; ++i)
        for (int j = 0; j < r && ok; ++j) {
          std::vector<RatFunc> terms;
          for (int k = 0; k < r; ++k)
            terms.push_back(rep.E.at(i, k) * yp.at(k, k) * rep.E.at(k, j));
          terms.push_back(p.zero() - dm * rep.E.at(i, j));
          ok = detail::flat_sum_is_zero(terms, p.zero());
        }
      ++counted;
      if (!ok)
        fail(out, "E Y^-" + std::to_string(a) + " E differs from delta_-" + std::to_string(a) +
                      " E (r=" + std::to_string(r) + ")");
    }
  }
  if (out.pass)
    out.detail = std::to_string(counted) + " symbolic delta agreements, including module moments";
  return out;
}

// 5. One-node recursion for the shape functions at every addable node of every
//    multipartition of size <= 3: symbolic for r <= 2, seeded rational at r = 3.
Outcome criterion5() {
  Outcome out;
  int counted = 0;
  for (int r = 1; r <= 2; ++r)
    take_checks(out, check_qtilde_recursion(symbolic_params(r), 3), counted);
  Rng rng(35007u);
  for (int t = 0; t < 5; ++t) {
    Params<Rat> p = specialized_params(3, sample_parameters<Rat>(rng, 3));
    take_checks(out, check_qtilde_recursion(p, 3), counted);
  }
  if (out.pass)
    out.detail = std::to_string(counted) +
                 " addable-node recursions (symbolic r <= 2, 5 seeded trials at r = 3)";
  return out;
}

// 6. Weight suite at n <= 3, r <= 2: base case, shape independence along every
//    path, telescoping at every shape, partition of unity, and nonvanishing.
Outcome criterion6() {
  Outcome out;
  int counted = 0;
  for (int r = 1; r <= 2; ++r) {
    Params<RatFunc> p = symbolic_params(r);
    take_checks(out, {check_weight_base(p)}, counted);

    // Shape independence: folding the one-step factors along any path of
    // length <= 3 gives the weight of its final shape.
    WeightEngine<RatFunc> eng(p);
    for (int n = 0; n <= 3; ++n) {
      WeightTable<RatFunc> table = eng.table(n);
      for (const UpDownTableau& t : enumerate_tableaux(n, r)) {
        RatFunc w = p.one();
        for (int k = 1; k <= t.length(); ++k)
          w = weight_step(p, t.shapes[static_cast<size_t>(k - 1)], t.step(k).first, w);
        ++counted;
        if (!(w == table.entries.at(t.shape())))
          fail(out, "path weight differs from shape weight along " + t.str());
      }
    }

    take_checks(out, check_weight_telescoping(p, 3), counted);

    // Partition of unity.  Symbolically the level-3 sum follows from the
    // level-2 sum and the level-3 telescoping identities verified above
    // (group the paths by their next-to-last shape); the direct level-3 fold
    // is only tractable at rank 1 and at rational points, both done here.
    for (int n = 0; n <= (r == 1 ? 3 : 2); ++n)
      take_checks(out, {check_weight_partition(p, n)}, counted);

    take_checks(out, check_weight_nonzero(p, 3), counted);
  }
  Rng rng(61003u);
  for (int t = 0; t < 2; ++t) {
    Params<Rat> p = specialized_params(2, sample_parameters<Rat>(rng, 2));
    take_checks(out, {check_weight_partition(p, 3)}, counted);
  }
  if (out.pass)
    out.detail = std::to_string(counted) +
                 " weight checks: base, path independence, telescoping, unity, nonvanishing";
  return out;
}

// 7. Diagram algebra: associativity on 200 random triples, trace symmetry on
//    500 random pairs, the bimodule property of the strand-closing map on 100
//    triples, and nonzero Gram determinants at (n, r) = (2, 2) and (2, 3).
Outcome criterion7() {
  Outcome out;
  using Elem = DiagramElement<RatFunc>;
  auto one_diagram = [](const ZrBrauerDiagram& d) {
    return make_element(d, RatFunc::parse(theta_vars(d.r()), "1"), symbolic_thetas(d.r()));
  };
  Rng rng(77001u);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.raw(4));
    int r = 1 + static_cast<int>(rng.raw(3));
    Elem x = one_diagram(random_diagram(rng, n, r));
    Elem y = one_diagram(random_diagram(rng, n, r));
    Elem z = one_diagram(random_diagram(rng, n, r));
    if (!equal(multiply(multiply(x, y), z), multiply(x, multiply(y, z))))
      fail(out, "associativity failed at trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng.raw(4));
    int r = 1 + static_cast<int>(rng.raw(3));
    Elem x = one_diagram(random_diagram(rng, n, r));
    Elem y = one_diagram(random_diagram(rng, n, r));
    if (!(markov_trace(multiply(x, y)) == markov_trace(multiply(y, x))))
      fail(out, "trace symmetry failed at trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.raw(2));
    int r = 1 + static_cast<int>(rng.raw(3));
    Elem a = one_diagram(random_diagram(rng, n - 1, r));
    Elem b = one_diagram(random_diagram(rng, n - 1, r));
    Elem x = one_diagram(random_diagram(rng, n, r));
    Elem lhs = conditional_expectation(
        multiply(multiply(include_element(a), x), include_element(b)));
    Elem rhs = multiply(multiply(a, conditional_expectation(x)), b);
    if (!equal(lhs, rhs)) fail(out, "bimodule property failed at trial " + std::to_string(trial));
  }
  for (int r : {2, 3}) {
    std::vector<Rat> th;
    for (int j = 0; j < theta_count(r); ++j) th.push_back(rng.rational());
    Rat det = gram_matrix(2, r, th).determinant();
    if (k_is_zero(det))
      fail(out, "Gram determinant vanished at (n, r) = (2, " + std::to_string(r) + ")");
  }
  if (out.pass)
    out.detail = "associativity x200, trace symmetry x500, bimodule x100, Gram determinants "
                 "nonzero at (2,2) and (2,3)";
  return out;
}

// 8. Determinant identity and both residue-system identities: symbolic for
//    r <= 3, 20 seeded rational trials each for r = 4, 5.
Outcome criterion8() {
  Outcome out;
  int counted = 0;
  for (int r = 1; r <= 3; ++r)
    take_checks(out, check_cauchy_and_residue_identities(symbolic_params(r)), counted);
  for (int r = 4; r <= 5; ++r) {
    Rng rng(8800u + static_cast<uint64_t>(r));
    for (int t = 0; t < 20; ++t) {
      Params<Rat> p = specialized_params(r, sample_parameters<Rat>(rng, r));
      take_checks(out, check_cauchy_and_residue_identities(p), counted);
    }
  }
  if (out.pass)
    out.detail = std::to_string(counted) +
                 " identity checks (symbolic r <= 3, 20 seeded trials each at r = 4, 5)";
  return out;
}

// 9. The sufficient semisimplicity test flags a planted violation of each
//    clause and accepts a generic integer point through level 6.
Outcome criterion9() {
  Outcome out;
  int planted = 0;
  auto expect_violation = [&](const Params<Rat>& p, int n, const std::string& needle) {
    ++planted;
    SemisimpleReport rep = semisimple_sufficient(p, n);
    bool found = false;
    for (const auto& v : rep.violations) found = found || v == needle;
    if (rep.ok || !found) fail(out, "planted violation not detected: " + needle);
  };
  expect_violation(Params<Rat>(1, Rat(1), Rat(2), {Rat(2)}), 1, "q^2 = 1");
  {
    std::vector<Rat> u{Rat(8), Rat(3)};
    expect_violation(Params<Rat>(2, Rat(2), canonical_rho(2, Rat(2), u), u), 2, "u1 = +q^3");
  }
  {
    std::vector<Rat> u{Rat(-8), Rat(3)};
    expect_violation(Params<Rat>(2, Rat(2), canonical_rho(2, Rat(2), u), u), 2, "u1 = -q^3");
  }
  {
    std::vector<Rat> u{Rat(12), Rat(3)};
    expect_violation(Params<Rat>(2, Rat(2), canonical_rho(2, Rat(2), u), u), 2, "u1/u2 = q^2");
  }
  {
    std::vector<Rat> u{Rat(6), Rat(2) / 3};
    expect_violation(Params<Rat>(2, Rat(2), canonical_rho(2, Rat(2), u), u), 1, "u1*u2 = q^2");
  }
  static const long generic_u[] = {3, 5, 7};
  for (int r = 1; r <= 3; ++r) {
    std::vector<Rat> u;
    for (int j = 0; j < r; ++j) u.push_back(Rat(generic_u[j]));
    Params<Rat> p(r, Rat(2), canonical_rho(r, Rat(2), u), u);
    SemisimpleReport rep = semisimple_sufficient(p, 6);
    if (!rep.ok) fail(out, "generic integer point flagged: " + clip(rep.violations[0]));
  }
  if (out.pass)
    out.detail = std::to_string(planted) +
                 " planted violations detected; generic integer points clean to level 6";
  return out;
}

int run_one(int k) {
  using Fn = Outcome (*)();
  static const Fn fns[9] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9};
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fns[k - 1]();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %d: %s (%s; %.1fs)\n", k, out.pass ? "PASS" : "FAIL",
              out.detail.c_str(), secs);
  std::fflush(stdout);
  return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
    return 2;
  }
  if (argc == 2) {
    int k = std::atoi(argv[1]);
    if (k < 1 || k > 9) {
      std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
      return 2;
    }
    return run_one(k);
  }
  int rc = 0;
  for (int k = 1; k <= 9; ++k) rc |= run_one(k);
  return rc;
}
