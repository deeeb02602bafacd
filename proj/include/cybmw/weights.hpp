#pragma once

// Markov-trace weights on up-down tableaux, the eigenvalue generating
// function attached to a shape, its one-node recursion, and a sufficient
// numeric criterion for semisimplicity.

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cybmw/error.hpp"
#include "cybmw/ground.hpp"
#include "cybmw/multipartition.hpp"
#include "cybmw/series.hpp"

namespace cybmw {

namespace detail {

template <class K>
void require_weight_params(const Params<K>& p) {
  const std::string& viol = p.precondition_violation();
  if (!viol.empty())
    throw Error(Code::DegenerateParameters,
                "parameters violate generic-position preconditions: " + viol);
  if (!p.rho_is_canonical())
    throw Error(Code::DegenerateParameters,
                "weight computations require the canonical twist parameter");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Shape generating function: value(t) = p * A(t) * prod over incident nodes
// alpha of (t - b(alpha)^-1)/(t - b(alpha)), with p the product of all u_j.

template <class K>
struct QtildeFunc {
  Multipartition shape;
  TRat<K> value;
};

namespace detail {

// N(t) = prod (t - b^-1) and D(t) = prod (t - b) over the incident (addable
// and removable) nodes of the shape.  All coefficients are products of node
// eigenvalues, so the polynomials stay compact.
template <class K>
std::pair<TPoly<K>, TPoly<K>> node_factor_polys(const Params<K>& p,
                                                const Multipartition& lam) {
  const K one = p.one();
  TPoly<K> num = tpoly_constant(one);
  TPoly<K> den = tpoly_constant(one);
  auto mul_node = [&](const Node& nd) {
    const K b = b_value(p, nd, lam);
    num = tpoly_mul(num, tpoly_from<K>({p.zero() - k_inv(b), one}), one);
    den = tpoly_mul(den, tpoly_from<K>({p.zero() - b, one}), one);
  };
  for (const Node& nd : addable_nodes(lam)) mul_node(nd);
  for (const Node& nd : removable_nodes(lam)) mul_node(nd);
  return {std::move(num), std::move(den)};
}

// Numerator and denominator of the one-node update ratio
//   (t - c)^2 (t - q^-2 c^-1)(t - q^2 c^-1) / ((t - c^-1)^2 (t - q^-2 c)(t - q^2 c))
// for the multiplicative content c of the added node.
template <class K>
std::pair<TPoly<K>, TPoly<K>> update_ratio_polys(const Params<K>& p, const K& c) {
  const K one = p.one();
  const K cinv = k_inv(c);
  const K q2 = p.q() * p.q();
  const K q2inv = k_inv(q2);
  auto lin = [&](const K& root) { return tpoly_from<K>({p.zero() - root, one}); };
  TPoly<K> num = tpoly_mul(tpoly_mul(lin(c), lin(c), one),
                           tpoly_mul(lin(q2inv * cinv), lin(q2 * cinv), one), one);
  TPoly<K> den = tpoly_mul(tpoly_mul(lin(cinv), lin(cinv), one),
                           tpoly_mul(lin(q2inv * c), lin(q2 * c), one), one);
  return {std::move(num), std::move(den)};
}

}  // namespace detail

template <class K>
QtildeFunc<K> qtilde(const Params<K>& p, const Multipartition& lam) {
  detail::require_weight_params(p);
  if (lam.r() != p.r())
    throw Error(Code::ParameterMismatch,
                "shape has " + std::to_string(lam.r()) + " components but parameters have rank " +
                    std::to_string(p.r()));
  const K one = p.one();
  auto [num, den] = detail::node_factor_polys(p, lam);
  TRat<K> val = trat_mul(A_of_t(p), trat_constant(p.p_product(), one), one);
  return QtildeFunc<K>{lam, trat_mul(val, TRat<K>{std::move(num), std::move(den)}, one)};
}

// Cleared-denominator gap of the one-node recursion.  The recursion states
// that adding node alpha to mu multiplies the generating function by the
// update ratio; since the common prefactor p*A(t) never vanishes, the
// recursion holds exactly when
//   N_lam * D_mu * Rden  ==  N_mu * Rnum * D_lam
// as polynomials in t.  Returns lhs - rhs.
template <class K>
TPoly<K> qtilde_recursion_gap(const Params<K>& p, const Multipartition& mu,
                              const Node& alpha) {
  detail::require_weight_params(p);
  Multipartition lam = add_node(mu, alpha);  // throws NodeNotIncident when invalid
  const K one = p.one();
  auto [nl, dl] = detail::node_factor_polys(p, lam);
  auto [nm, dm] = detail::node_factor_polys(p, mu);
  auto [rnum, rden] = detail::update_ratio_polys(p, content_value(p, alpha));
  TPoly<K> lhs = tpoly_mul(tpoly_mul(nl, dm, one), rden, one);
  TPoly<K> rhs = tpoly_mul(tpoly_mul(nm, rnum, one), dl, one);
  return tpoly_sub(lhs, rhs, one);
}

// Full residual Q(t, mu + alpha) - Q(t, mu) * ratio, assembled from the gap so
// that an identically-zero gap short-circuits the expensive arithmetic.
template <class K>
TRat<K> qtilde_recursion_residual(const Params<K>& p, const Multipartition& mu,
                                  const Node& alpha) {
  TPoly<K> gap = qtilde_recursion_gap(p, mu, alpha);
  const K one = p.one();
  if (gap.c.empty()) return trat_constant(p.zero(), one);
  Multipartition lam = add_node(mu, alpha);
  auto [nl, dl] = detail::node_factor_polys(p, lam);
  auto [nm, dm] = detail::node_factor_polys(p, mu);
  auto [rnum, rden] = detail::update_ratio_polys(p, content_value(p, alpha));
  (void)nl;
  (void)nm;
  (void)rnum;
  TRat<K> pa = trat_mul(A_of_t(p), trat_constant(p.p_product(), one), one);
  TPoly<K> den = tpoly_mul(tpoly_mul(dl, dm, one), rden, one);
  return trat_mul(pa, TRat<K>{std::move(gap), std::move(den)}, one);
}

// ---------------------------------------------------------------------------
// Weight recursion.  One step extends a weight along an up-down tableau: mu is
// the previous shape, beta the node added to or removed from it, and b its
// eigenvalue b(beta, mu).  The new weight is
//   delta_0^-1 * p * b^-1 * kernel(b) * prod_{alpha incident to mu, alpha != beta}
//       (b - b(alpha, mu)^-1)/(b - b(alpha, mu)) * w_prev
// with kernel(b) = (b - b^-1)/(q - q^-1) + 1 for odd rank and
// (q^-1 b - q b^-1)/(q - q^-1) for even rank; p is the product of all u_j.
// The kernel equals A(b)(b - b^-1) precisely when the twist is canonical,
// which is why the canonical twist is required here.

template <class K>
K weight_step(const Params<K>& p, const Multipartition& mu, const Node& beta,
              const K& w_prev) {
  detail::require_weight_params(p);
  const K b = b_value(p, beta, mu);  // throws NodeNotIncident when invalid
  const K one = p.one();
  const K binv = k_inv(b);
  const K qq = p.q() - k_inv(p.q());
  K kernel;
  if (p.r() % 2 == 1)
    kernel = (b - binv) / qq + one;
  else
    kernel = (k_inv(p.q()) * b - p.q() * binv) / qq;
  K acc = k_inv(p.delta(0)) * p.p_product() * binv * kernel;
  auto other_factor = [&](const Node& alpha) {
    if (alpha == beta) return;
    const K ba = b_value(p, alpha, mu);
    acc = acc * (b - k_inv(ba)) / (b - ba);
  };
  for (const Node& alpha : addable_nodes(mu)) other_factor(alpha);
  for (const Node& alpha : removable_nodes(mu)) other_factor(alpha);
  return acc * w_prev;
}

// ---------------------------------------------------------------------------
// Per-level weight tables.  All tableaux of equal length and final shape carry
// the same weight, so the table stores one value per shape.

template <class K>
struct WeightTable {
  int n = 0;
  std::map<Multipartition, K> entries;
};

// Extends the table one level.  Each shape of the next level is reached from
// possibly several shapes of the current level; checking that every such
// predecessor produces the same value is, by induction on the length, the
// same as checking that every tableau of that length and shape does.
template <class K>
WeightTable<K> weight_table_step(const Params<K>& p, const WeightTable<K>& prev) {
  WeightTable<K> cur;
  cur.n = prev.n + 1;
  for (const Multipartition& lam : gamma_level(cur.n, p.r())) {
    bool have = false;
    K w = p.zero();
    for (const auto& [mu, wmu] : prev.entries) {
      if (!differ_by_one_node(mu, lam)) continue;
      K cand = weight_step(p, mu, connecting_node(mu, lam), wmu);
      if (!have) {
        w = std::move(cand);
        have = true;
      } else if (!(w == cand)) {
        throw Error(Code::ShapeInconsistency,
                    "conflicting weights computed for shape " + lam.str() + " at level " +
                        std::to_string(cur.n));
      }
    }
    if (!have)
      throw Error(Code::Internal, "level shape " + lam.str() + " has no predecessor");
    cur.entries.emplace(lam, std::move(w));
  }
  return cur;
}

template <class K>
WeightTable<K> weight_table(const Params<K>& p, int n) {
  detail::require_weight_params(p);
  if (n < 0) throw Error(Code::InvalidArgument, "level must be nonnegative");
  WeightTable<K> t;
  t.n = 0;
  t.entries.emplace(Multipartition(p.r()), p.one());
  for (int m = 1; m <= n; ++m) t = weight_table_step(p, t);
  return t;
}

// Caches the tables per level, safe for concurrent use.
template <class K>
class WeightEngine {
 public:
  explicit WeightEngine(Params<K> p) : p_(std::move(p)) {
    detail::require_weight_params(p_);
  }

  const Params<K>& params() const { return p_; }

  WeightTable<K> table(int n) {
    if (n < 0) throw Error(Code::InvalidArgument, "level must be nonnegative");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(levels_.size()) <= n) {
      if (levels_.empty())
        levels_.push_back(weight_table(p_, 0));
      else
        levels_.push_back(weight_table_step(p_, levels_.back()));
    }
    return levels_[static_cast<size_t>(n)];
  }

  K weight(int n, const Multipartition& lam) {
    WeightTable<K> t = table(n);
    auto it = t.entries.find(lam);
    if (it == t.entries.end())
      throw Error(Code::ShapeNotInLevel,
                  "shape " + lam.str() + " does not occur at level " + std::to_string(n));
    return it->second;
  }

 private:
  Params<K> p_;
  std::mutex mu_;
  std::vector<WeightTable<K>> levels_;
};

// ---------------------------------------------------------------------------
// Verification battery reused by tests and the command-line verifier.

// One-node recursion over every shape of total size <= cap (with matching
// parity) and every addable node.
template <class K>
std::vector<Check> check_qtilde_recursion(const Params<K>& p, int cap) {
  std::vector<Check> out;
  std::vector<Multipartition> shapes;
  for (int n = std::max(cap - 1, 0); n <= cap; ++n)
    for (const auto& lam : gamma_level(n, p.r())) shapes.push_back(lam);
  std::sort(shapes.begin(), shapes.end());
  shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
  for (const auto& mu : shapes)
    for (const Node& alpha : addable_nodes(mu)) {
      TPoly<K> gap = qtilde_recursion_gap(p, mu, alpha);
      Check c;
      c.name = "shape-function-recursion(" + mu.str() + " + " + alpha.str() + ")";
      c.pass = gap.c.empty();
      if (!c.pass) c.residual = "nonzero polynomial gap of degree " + std::to_string(gap.hi());
      out.push_back(std::move(c));
    }
  return out;
}

// Telescoping at one shape: the weight-step factors over all incident nodes
// sum to 1.  Checked with the common prefactor delta_0^-1 p / (q - q^-1)
// divided out, so every summand is a ratio of products of binomials:
//   sum_beta b^-1 khat(b) prod_{alpha != beta} (b - b_alpha^-1)/(b - b_alpha)
//     == (q - q^-1) delta_0 / p
// with khat the (q - q^-1)-scaled parity kernel.
template <class K>
Check check_telescoping_shape(const Params<K>& p, const Multipartition& lam) {
  detail::require_weight_params(p);
  const K one = p.one();
  const K qq = p.q() - k_inv(p.q());
  std::vector<Node> inc = addable_nodes(lam);
  {
    auto rem = removable_nodes(lam);
    inc.insert(inc.end(), rem.begin(), rem.end());
  }
  std::vector<K> bs;
  bs.reserve(inc.size());
  for (const Node& nd : inc) bs.push_back(b_value(p, nd, lam));
  K sum = p.zero();
  for (size_t i = 0; i < inc.size(); ++i) {
    const K& b = bs[i];
    K khat;
    if (p.r() % 2 == 1)
      khat = b - k_inv(b) + qq;
    else
      khat = k_inv(p.q()) * b - p.q() * k_inv(b);
    K term = k_inv(b) * khat;
    for (size_t k = 0; k < inc.size(); ++k) {
      if (k == i) continue;
      term = term * (b - k_inv(bs[k])) / (b - bs[k]);
    }
    sum = sum + term;
  }
  K rhs = qq * p.delta(0) / p.p_product();
  Check c;
  c.name = "weight-telescoping(" + lam.str() + ")";
  c.pass = sum == rhs;
  if (!c.pass) c.residual = k_str(sum - rhs);
  return c;
}

template <class K>
std::vector<Check> check_weight_telescoping(const Params<K>& p, int max_level) {
  std::vector<Check> out;
  for (int n = 0; n <= max_level; ++n)
    for (const auto& lam : gamma_level(n, p.r()))
      out.push_back(check_telescoping_shape(p, lam));
  return out;
}

// Direct partition of unity at one level: the weights of all tableaux of
// length n sum to 1.
template <class K>
Check check_weight_partition(const Params<K>& p, int n) {
  auto counts = count_tableaux_level(n, p.r());
  WeightTable<K> t = weight_table(p, n);
  K sum = p.zero();
  for (const auto& [lam, w] : t.entries)
    sum = sum + make_int<K>(p.one(), static_cast<long>(counts.at(lam))) * w;
  Check c;
  c.name = "weight-partition(level=" + std::to_string(n) + ")";
  c.pass = sum == p.one();
  if (!c.pass) c.residual = k_str(sum - p.one());
  return c;
}

// One-strand base: the level-1 weights are gamma_j / delta_0.
template <class K>
Check check_weight_base(const Params<K>& p) {
  WeightTable<K> t = weight_table(p, 1);
  auto gam = p.gammas();
  bool pass = true;
  int j = 0;
  for (const auto& [lam, w] : t.entries) {
    Node nd = connecting_node(Multipartition(p.r()), lam);
    const K expect = gam.gamma[static_cast<size_t>(nd.j - 1)] / p.delta(0);
    if (!(w == expect)) pass = false;
    ++j;
  }
  Check c;
  c.name = "weight-base(level=1)";
  c.pass = pass && j == p.r();
  return c;
}

template <class K>
std::vector<Check> check_weight_nonzero(const Params<K>& p, int max_level) {
  std::vector<Check> out;
  WeightEngine<K> eng(p);
  for (int n = 0; n <= max_level; ++n)
    for (const auto& [lam, w] : eng.table(n).entries) {
      Check c;
      c.name = "weight-nonzero(level=" + std::to_string(n) + ", " + lam.str() + ")";
      c.pass = !k_is_zero(w);
      out.push_back(std::move(c));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Eigenvalues of the commuting family along a tableau: the k-th entry is the
// step value b(k, T).

template <class K>
std::vector<K> eigenvalue_sequence(const Params<K>& p, const UpDownTableau& t) {
  std::vector<K> out;
  out.reserve(static_cast<size_t>(t.length()));
  for (int k = 1; k <= t.length(); ++k) out.push_back(tableau_step_b(p, t, k));
  return out;
}

// ---------------------------------------------------------------------------
// Sufficient criterion for semisimplicity at a numeric specialization:
//   - u_j != +-q^e for every odd |e| <= 2n+1,
//   - u_j/u_j' != q^(2k) and u_j*u_j' != q^(2k) for all j != j', |2k| <= 2n.
// Every violated condition is reported.

struct SemisimpleReport {
  bool ok = true;
  std::vector<std::string> violations;
};

template <class K>
SemisimpleReport semisimple_sufficient(const Params<K>& p, int n) {
  if (n < 0) throw Error(Code::InvalidArgument, "level must be nonnegative");
  SemisimpleReport rep;
  auto flag = [&](const std::string& v) {
    rep.ok = false;
    rep.violations.push_back(v);
  };
  const K one = p.one();
  const K q = p.q();
  if (k_is_zero(q)) {
    flag("q = 0");
    return rep;
  }
  if (q * q == one) flag("q^2 = 1");
  const int r = p.r();
  auto uname = [](int j) { return "u" + std::to_string(j); };

  for (int j = 1; j <= r; ++j) {
    const K uj = p.u()[static_cast<size_t>(j - 1)];
    for (int e = 1; e <= 2 * n + 1; e += 2) {
      const K qe = k_pow(q, e);
      for (int se = +1; se >= -1; se -= 2) {
        const K qp = se > 0 ? qe : k_inv(qe);
        std::string ep = (se > 0 ? "" : "-") + std::to_string(e);
        if (uj == qp) flag(uname(j) + " = +q^" + ep);
        if (uj == p.zero() - qp) flag(uname(j) + " = -q^" + ep);
      }
    }
  }
  for (int j = 1; j <= r; ++j)
    for (int jp = j + 1; jp <= r; ++jp) {
      const K uj = p.u()[static_cast<size_t>(j - 1)];
      const K ujp = p.u()[static_cast<size_t>(jp - 1)];
      for (int k = 0; k <= n; ++k) {
        const K q2k = k_pow(q, 2 * k);
        const K q2kinv = k_inv(q2k);
        std::string pos = "q^" + std::to_string(2 * k);
        std::string neg = "q^-" + std::to_string(2 * k);
        if (uj == ujp * q2k) flag(uname(j) + "/" + uname(jp) + " = " + pos);
        if (k > 0 && uj == ujp * q2kinv) flag(uname(j) + "/" + uname(jp) + " = " + neg);
        if (uj * ujp == q2k) flag(uname(j) + "*" + uname(jp) + " = " + pos);
        if (k > 0 && uj * ujp == q2kinv) flag(uname(j) + "*" + uname(jp) + " = " + neg);
      }
    }
  return rep;
}

}  // namespace cybmw
