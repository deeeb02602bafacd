#pragma once

// Explicit r-dimensional module of the two-strand algebra: the matrices Y, E,
// G in the eigenbasis of Y, the full defining-relation battery, and the
// spectral idempotents of Y.

#include <string>
#include <vector>

#include "cybmw/ground.hpp"
#include "cybmw/matrix.hpp"

namespace cybmw {

template <class K>
struct W2Rep {
  Matrix<K> Y, E, G;
};

// Y e_j = u_j e_j;  E e_j = gamma_j * sum_i e_i;
// G e_j = (q^-1 - q) * sum_i (gamma_j - [i == j]) / (1 - u_i u_j) * e_i.
template <class K>
W2Rep<K> build_w2_rep(const Params<K>& p) {
  auto gam = p.gammas();  // throws DegenerateParameters for colliding u's
  const int r = p.r();
  const K one = p.one();
  const K qdiff = k_inv(p.q()) - p.q();
  Matrix<K> y(r, r, p.zero());
  Matrix<K> e(r, r, p.zero());
  Matrix<K> g(r, r, p.zero());
  for (int j = 0; j < r; ++j) {
    const K& uj = p.u()[static_cast<size_t>(j)];
    y.at(j, j) = uj;
    for (int i = 0; i < r; ++i) {
      const K& ui = p.u()[static_cast<size_t>(i)];
      const K& gj = gam.gamma[static_cast<size_t>(j)];
      e.at(i, j) = gj;
      K num = i == j ? gj - one : gj;
      g.at(i, j) = qdiff * num / (one - ui * uj);
    }
  }
  return W2Rep<K>{std::move(y), std::move(e), std::move(g)};
}

// Diagonal power of Y, valid for negative exponents as well.
template <class K>
Matrix<K> y_power(const Params<K>& p, long a) {
  const int r = p.r();
  Matrix<K> m(r, r, p.zero());
  for (int j = 0; j < r; ++j) m.at(j, j) = k_pow(p.u()[static_cast<size_t>(j)], a);
  return m;
}

// P_j = prod_{l != j} (Y - u_l) / (u_j - u_l); the projection onto the j-th
// eigenline of Y.
template <class K>
std::vector<Matrix<K>> spectral_idempotents(const Params<K>& p, const W2Rep<K>& rep) {
  const std::string& viol = p.precondition_violation();
  if (!viol.empty())
    throw Error(Code::DegenerateParameters,
                "parameters violate generic-position preconditions: " + viol);
  const int r = p.r();
  const K one = p.one();
  std::vector<Matrix<K>> out;
  for (int j = 0; j < r; ++j) {
    Matrix<K> acc = Matrix<K>::identity(r, one);
    for (int l = 0; l < r; ++l) {
      if (l == j) continue;
      const K& uj = p.u()[static_cast<size_t>(j)];
      const K& ul = p.u()[static_cast<size_t>(l)];
      Matrix<K> shift = rep.Y + Matrix<K>::identity(r, one).scaled(p.zero() - ul);
      acc = acc * shift.scaled(k_inv(uj - ul));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace detail {

template <class K>
Check matrix_check(const std::string& name, const Matrix<K>& lhs, const Matrix<K>& rhs) {
  Check c;
  c.name = name;
  c.pass = lhs == rhs;
  if (!c.pass) c.residual = "nonzero residual matrix";
  return c;
}

// Decides whether the terms sum to zero.  Generic fields fold directly.
template <class K>
bool flat_sum_is_zero(const std::vector<K>& terms, const K& zero) {
  K acc = zero;
  for (const K& t : terms) acc = acc + t;
  return k_is_zero(acc);
}

// Gcd-free rational functions: folding a sum pairwise cross-multiplies the
// denominators and squares the representation at every step.  Clearing all
// denominators in one pass keeps everything polynomial:
//   sum_k N_k / D_k == 0   iff   sum_k N_k * prod_{l != k} D_l == 0.
inline bool flat_sum_is_zero(const std::vector<RatFunc>& terms, const RatFunc&) {
  const size_t n = terms.size();
  if (n == 0) return true;
  std::vector<LaurentPoly> pre(n), suf(n);
  pre[0] = LaurentPoly::integer(Int(1));
  for (size_t k = 1; k < n; ++k) pre[k] = pre[k - 1] * terms[k - 1].den();
  suf[n - 1] = LaurentPoly::integer(Int(1));
  for (size_t k = n - 1; k-- > 0;) suf[k] = suf[k + 1] * terms[k + 1].den();
  LaurentPoly acc = LaurentPoly::zero(terms[0].num().vars());
  for (size_t k = 0; k < n; ++k) acc += terms[k].num() * pre[k] * suf[k];
  return acc.is_zero();
}

inline Check flat_check(const std::string& name, bool pass) {
  Check c;
  c.name = name;
  c.pass = pass;
  if (!pass) c.residual = "nonzero residual";
  return c;
}

}  // namespace detail

// Every defining relation of the module, each reported as a named check:
// the cyclotomic minimal polynomial of Y, the scaled idempotency of E, the
// moment relations E Y^a E = delta_a E over [moment_lo, moment_hi], the
// conjugation/untwisting/unwrapping relations tying G, Y, E and the twist,
// invertibility of G via Y G Y, the skein relation, the spectral idempotent
// calculus, and the Vandermonde independence of the cyclic vectors.
template <class K>
std::vector<Check> check_w2_relations(const Params<K>& p, const W2Rep<K>& rep,
                                      long moment_lo = -5, long moment_hi = 5) {
  std::vector<Check> out;
  const int r = p.r();
  const K one = p.one();
  const Matrix<K> id = Matrix<K>::identity(r, one);
  const Matrix<K> zero(r, r, p.zero());
  const K qdiff_neg = k_inv(p.q()) - p.q();  // q^-1 - q
  const K qdiff_pos = p.q() - k_inv(p.q());  // q - q^-1

  Matrix<K> minpoly = id;
  for (int j = 0; j < r; ++j)
    minpoly = minpoly * (rep.Y + id.scaled(p.zero() - p.u()[static_cast<size_t>(j)]));
  out.push_back(detail::matrix_check("cyclotomic-minimal-polynomial", minpoly, zero));

  // Every product identity below is verified entrywise through
  // detail::flat_sum_is_zero so that no intermediate rational sum is ever
  // folded.  The rank-one structure of E (row i of E is (gamma_1,...,gamma_r)
  // for every i, so sum_j gamma_j = delta_0 is invertible and some gamma_j is
  // nonzero) collapses identities whose entries repeat across rows or columns
  // to one representative scalar identity per row, column, or matrix; each
  // reduction is noted in place and is an equivalence, not a sample.
  auto gam = p.gammas();
  const auto& gamma = gam.gamma;
  auto uu = [&](int k) -> const K& { return p.u()[static_cast<size_t>(k)]; };
  auto gg = [&](int k) -> const K& { return gamma[static_cast<size_t>(k)]; };
  const K rho_inv = k_inv(p.rho());

  {
    // (E^2 - delta_0 E)[i][j] = gamma_j * (sum_k gamma_k - delta_0).
    std::vector<K> terms(gamma.begin(), gamma.end());
    terms.push_back(p.zero() - p.delta(0));
    out.push_back(detail::flat_check("rank-one-idempotent",
                                     detail::flat_sum_is_zero(terms, p.zero())));
  }

  for (long a = moment_lo; a <= moment_hi; ++a) {
    // (E Y^a E - delta_a E)[i][j] = gamma_j * (sum_k gamma_k u_k^a - delta_a).
    std::vector<K> terms;
    for (int k = 0; k < r; ++k) terms.push_back(gg(k) * k_pow(uu(k), a));
    terms.push_back(p.zero() - p.delta(a));
    out.push_back(detail::flat_check("moment(a=" + std::to_string(a) + ")",
                                     detail::flat_sum_is_zero(terms, p.zero())));
  }

  {
    // (Y G Y)[i][j] = u_i G[i][j] u_j entry by entry.
    bool ok = true;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        std::vector<K> terms{uu(i) * rep.G.at(i, j) * uu(j), p.zero() - rep.G.at(i, j),
                             qdiff_neg * gg(j)};  // +(q^-1 - q) gamma_j
        if (i == j) terms.push_back(qdiff_pos);   // -(q^-1 - q) on the diagonal
        ok = ok && detail::flat_sum_is_zero(terms, p.zero());
      }
    out.push_back(detail::flat_check("conjugation-shift", ok));
  }

  {
    // (G E)[i][j] = (sum_k G[i][k]) gamma_j, so G E = rho^-1 E reduces to one
    // row-sum identity per row.
    bool ok = true;
    for (int i = 0; i < r; ++i) {
      std::vector<K> terms;
      for (int k = 0; k < r; ++k) terms.push_back(rep.G.at(i, k));
      terms.push_back(p.zero() - rho_inv);
      ok = ok && detail::flat_sum_is_zero(terms, p.zero());
    }
    out.push_back(detail::flat_check("untwist-left", ok));
  }

  {
    // (E G)[i][j] = sum_k gamma_k G[k][j] is independent of i: one identity
    // per column.
    bool ok = true;
    for (int j = 0; j < r; ++j) {
      std::vector<K> terms;
      for (int k = 0; k < r; ++k) terms.push_back(gg(k) * rep.G.at(k, j));
      terms.push_back((p.zero() - rho_inv) * gg(j));
      ok = ok && detail::flat_sum_is_zero(terms, p.zero());
    }
    out.push_back(detail::flat_check("untwist-right", ok));
  }

  {
    // (E Y G Y)[i][j] = sum_k gamma_k u_k G[k][j] u_j, independent of i.
    bool ok = true;
    for (int j = 0; j < r; ++j) {
      std::vector<K> terms;
      for (int k = 0; k < r; ++k) terms.push_back(gg(k) * uu(k) * rep.G.at(k, j) * uu(j));
      terms.push_back((p.zero() - p.rho()) * gg(j));
      ok = ok && detail::flat_sum_is_zero(terms, p.zero());
    }
    out.push_back(detail::flat_check("unwrap-left", ok));
  }

  {
    // (Y G Y E)[i][j] = gamma_j * u_i sum_k G[i][k] u_k: one identity per row.
    bool ok = true;
    for (int i = 0; i < r; ++i) {
      std::vector<K> terms;
      for (int k = 0; k < r; ++k) terms.push_back(uu(i) * rep.G.at(i, k) * uu(k));
      terms.push_back(p.zero() - p.rho());
      ok = ok && detail::flat_sum_is_zero(terms, p.zero());
    }
    out.push_back(detail::flat_check("unwrap-right", ok));
  }

  {
    // The sums (G Y G)[i][j] = sum_k G[i][k] u_k G[k][j] drive two checks:
    // (G YGY - YGY G)[i][j] = (u_j - u_i)(G Y G)[i][j] and (G YGY)[i][j] =
    // u_j (G Y G)[i][j].  With the u's invertible and pairwise distinct, the
    // braid commutation says exactly that G Y G is diagonal, and G YGY = Id
    // additionally needs u_i (G Y G)[i][i] = 1; evaluating each sum once
    // covers both.
    bool offdiag_zero = true;
    bool diag_one = true;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        std::vector<K> terms;
        for (int k = 0; k < r; ++k) terms.push_back(rep.G.at(i, k) * uu(k) * rep.G.at(k, j));
        if (i == j) {
          for (K& t : terms) t = t * uu(i);
          terms.push_back(p.zero() - one);
          diag_one = diag_one && detail::flat_sum_is_zero(terms, p.zero());
        } else {
          offdiag_zero = offdiag_zero && detail::flat_sum_is_zero(terms, p.zero());
        }
      }
    out.push_back(detail::flat_check("braid-commutation", offdiag_zero));
    out.push_back(detail::flat_check("inverse-by-conjugation", offdiag_zero && diag_one));
  }

  {
    // (G - YGY)[i][j] = (q - q^-1)(Id - E)[i][j] entry by entry.
    bool ok = true;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        std::vector<K> terms{rep.G.at(i, j), p.zero() - uu(i) * rep.G.at(i, j) * uu(j),
                             qdiff_pos * gg(j)};
        if (i == j) terms.push_back(qdiff_neg);
        ok = ok && detail::flat_sum_is_zero(terms, p.zero());
      }
    out.push_back(detail::flat_check("skein", ok));
  }

  auto proj = spectral_idempotents(p, rep);
  Matrix<K> sum = zero;
  bool orth = true;
  for (int i = 0; i < r; ++i) {
    sum = sum + proj[static_cast<size_t>(i)];
    for (int j = 0; j < r; ++j) {
      Matrix<K> prod = proj[static_cast<size_t>(i)] * proj[static_cast<size_t>(j)];
      if (i == j ? !(prod == proj[static_cast<size_t>(i)]) : !prod.is_zero()) orth = false;
    }
  }
  Check c;
  c.name = "eigen-idempotent-system";
  c.pass = orth && sum == id;
  out.push_back(c);

  bool eigen = true;
  for (int j = 0; j < r; ++j) {
    const K& uj = p.u()[static_cast<size_t>(j)];
    if (!(rep.Y * proj[static_cast<size_t>(j)] == proj[static_cast<size_t>(j)].scaled(uj)))
      eigen = false;
    if (!(rep.E * proj[static_cast<size_t>(j)] * rep.E ==
          rep.E.scaled(gam.gamma[static_cast<size_t>(j)])))
      eigen = false;
  }
  Check c2;
  c2.name = "eigen-projection-moments";
  c2.pass = eigen;
  out.push_back(c2);

  // Columns m, Ym, ..., Y^{r-1}m with m the all-ones vector form a Vandermonde
  // matrix; its determinant is the product of the eigenvalue differences.
  Matrix<K> vand(r, r, p.zero());
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) vand.at(i, k) = k_pow(p.u()[static_cast<size_t>(i)], k);
  K det = vand.determinant();
  K expect = one;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      expect = expect * (p.u()[static_cast<size_t>(j)] - p.u()[static_cast<size_t>(i)]);
  Check c3;
  c3.name = "cyclic-vector-independence";
  c3.pass = !k_is_zero(det) && det == expect;
  if (!c3.pass) c3.residual = k_str(det - expect);
  out.push_back(c3);

  return out;
}

template <class K>
std::vector<Check> w2_verify(const Params<K>& p, long moment_lo = -5, long moment_hi = 5) {
  W2Rep<K> rep = build_w2_rep(p);
  return check_w2_relations(p, rep, moment_lo, moment_hi);
}

}  // namespace cybmw
