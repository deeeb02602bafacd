#pragma once

#include <vector>

#include "cybmw/scalars.hpp"

namespace cybmw {

// Laurent polynomial in one distinguished variable t with coefficients in K:
// c[i] multiplies t^(off + i).  Trimmed so that, when nonzero, the first and
// last stored coefficients are nonzero.
template <class K>
struct TPoly {
  int32_t off = 0;
  std::vector<K> c;

  bool is_zero() const { return c.empty(); }
  int32_t lo() const { return off; }
  int32_t hi() const { return off + static_cast<int32_t>(c.size()) - 1; }

  // Coefficient of t^k (like supplies the zero element's field context).
  K at(int32_t k, const K& like) const {
    if (k < lo() || k > hi()) return make_int<K>(like, 0);
    return c[static_cast<size_t>(k - off)];
  }

  void trim() {
    size_t b = 0, e = c.size();
    while (b < e && k_is_zero(c[b])) ++b;
    while (e > b && k_is_zero(c[e - 1])) --e;
    off += static_cast<int32_t>(b);
    c = std::vector<K>(c.begin() + static_cast<long>(b), c.begin() + static_cast<long>(e));
    if (c.empty()) off = 0;
  }
};

template <class K>
TPoly<K> tpoly_constant(const K& v) {
  TPoly<K> p;
  if (!k_is_zero(v)) p.c.push_back(v);
  return p;
}

// Builds c0 + c1*t + ... from an ascending coefficient list.
template <class K>
TPoly<K> tpoly_from(std::vector<K> coeffs, int32_t off = 0) {
  TPoly<K> p;
  p.off = off;
  p.c = std::move(coeffs);
  p.trim();
  return p;
}

template <class K>
TPoly<K> tpoly_add(const TPoly<K>& a, const TPoly<K>& b, const K& like) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int32_t lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  TPoly<K> r;
  r.off = lo;
  r.c.assign(static_cast<size_t>(hi - lo + 1), make_int<K>(like, 0));
  for (int32_t k = lo; k <= hi; ++k)
    r.c[static_cast<size_t>(k - lo)] = a.at(k, like) + b.at(k, like);
  r.trim();
  return r;
}

template <class K>
TPoly<K> tpoly_neg(const TPoly<K>& a) {
  TPoly<K> r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

template <class K>
TPoly<K> tpoly_sub(const TPoly<K>& a, const TPoly<K>& b, const K& like) {
  return tpoly_add(a, tpoly_neg(b), like);
}

template <class K>
TPoly<K> tpoly_mul(const TPoly<K>& a, const TPoly<K>& b, const K& like) {
  TPoly<K> r;
  if (a.is_zero() || b.is_zero()) return r;
  r.off = a.off + b.off;
  r.c.assign(a.c.size() + b.c.size() - 1, make_int<K>(like, 0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  r.trim();
  return r;
}

template <class K>
bool tpoly_eq(const TPoly<K>& a, const TPoly<K>& b) {
  if (a.c.size() != b.c.size()) return false;
  if (!a.is_zero() && a.off != b.off) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!(a.c[i] == b.c[i])) return false;
  return true;
}

// Rational function in t over K.
template <class K>
struct TRat {
  TPoly<K> num, den;
};

template <class K>
TRat<K> trat_from(TPoly<K> num, TPoly<K> den) {
  if (den.is_zero()) throw Error(Code::DivisionByZero, "zero denominator in t");
  return TRat<K>{std::move(num), std::move(den)};
}

template <class K>
TRat<K> trat_constant(const K& v, const K& like) {
  return TRat<K>{tpoly_constant(v), tpoly_constant(make_int<K>(like, 1))};
}

template <class K>
TRat<K> trat_add(const TRat<K>& a, const TRat<K>& b, const K& like) {
  if (tpoly_eq(a.den, b.den)) return TRat<K>{tpoly_add(a.num, b.num, like), a.den};
  return TRat<K>{
      tpoly_add(tpoly_mul(a.num, b.den, like), tpoly_mul(b.num, a.den, like), like),
      tpoly_mul(a.den, b.den, like)};
}

template <class K>
TRat<K> trat_sub(const TRat<K>& a, const TRat<K>& b, const K& like) {
  TRat<K> nb{tpoly_neg(b.num), b.den};
  return trat_add(a, nb, like);
}

template <class K>
TRat<K> trat_mul(const TRat<K>& a, const TRat<K>& b, const K& like) {
  return TRat<K>{tpoly_mul(a.num, b.num, like), tpoly_mul(a.den, b.den, like)};
}

template <class K>
TRat<K> trat_div(const TRat<K>& a, const TRat<K>& b, const K& like) {
  if (b.num.is_zero()) throw Error(Code::DivisionByZero, "division by zero in t");
  return TRat<K>{tpoly_mul(a.num, b.den, like), tpoly_mul(a.den, b.num, like)};
}

template <class K>
bool trat_eq(const TRat<K>& a, const TRat<K>& b, const K& like) {
  return tpoly_eq(tpoly_mul(a.num, b.den, like), tpoly_mul(b.num, a.den, like));
}

template <class K>
bool trat_is_zero(const TRat<K>& a) {
  return a.num.is_zero();
}

// Evaluates a TRat at t = point.
template <class K>
K trat_eval(const TRat<K>& f, const K& point) {
  auto eval = [&](const TPoly<K>& p) {
    K acc = make_int<K>(point, 0);
    for (size_t i = 0; i < p.c.size(); ++i)
      acc = acc + p.c[i] * k_pow(point, p.off + static_cast<int32_t>(i));
    return acc;
  };
  K d = eval(f.den);
  if (k_is_zero(d)) throw Error(Code::PoleAtPoint, "denominator vanishes at evaluation point");
  return eval(f.num) / d;
}

enum class SeriesDir { AtZero, AtInfinity };

// Truncated expansion of num/den as a power series in t (AtZero) or t^-1
// (AtInfinity), both starting at exponent 0.  Returns `count` coefficients.
// Throws NotExpandable when the function has a pole in the chosen direction
// (after cancelling any shared monomial power of t).
template <class K>
std::vector<K> trat_series(const TRat<K>& f, SeriesDir dir, int count, const K& like) {
  std::vector<K> out;
  if (count <= 0) return out;
  const K zero = make_int<K>(like, 0);
  if (f.den.is_zero()) throw Error(Code::DivisionByZero, "zero denominator in t");
  if (f.num.is_zero()) {
    out.assign(static_cast<size_t>(count), zero);
    return out;
  }
  // Orient so that we divide ascending sequences: M_i / D_i are coefficients
  // read from the relevant end (lowest exponent for AtZero, highest for
  // AtInfinity).
  auto grab = [&](const TPoly<K>& p, int i) {
    return dir == SeriesDir::AtZero ? p.at(p.lo() + i, like) : p.at(p.hi() - i, like);
  };
  int shift = dir == SeriesDir::AtZero ? f.num.lo() - f.den.lo() : f.den.hi() - f.num.hi();
  if (shift < 0)
    throw Error(Code::NotExpandable, "function has a pole in the chosen expansion direction");
  K d0 = grab(f.den, 0);
  std::vector<K> g;  // series of the shifted, unit-leading ratio
  g.reserve(static_cast<size_t>(count));
  for (int m = 0; m + shift < count; ++m) {
    K acc = grab(f.num, m);
    for (int i = 1; i <= m; ++i)
      acc = acc - grab(f.den, i) * g[static_cast<size_t>(m - i)];
    g.push_back(acc / d0);
  }
  out.assign(static_cast<size_t>(count), zero);
  for (size_t m = 0; m < g.size(); ++m) out[m + static_cast<size_t>(shift)] = g[m];
  return out;
}

// --- RatFunc front end --------------------------------------------------------

struct SeriesExpansion {
  SeriesDir dir;
  std::vector<RatFunc> coeffs;  // coefficient of t^-a (AtInfinity) or t^a (AtZero)
};

// Splits a fraction over a table containing "t" into a rational function in t
// whose coefficients are fractions in the remaining variables.
inline TRat<RatFunc> split_t(const RatFunc& f) {
  int tv = f.vars()->index("t");
  if (tv < 0)
    throw Error(Code::InvalidArgument, "variable table has no 't' variable to expand in");
  auto pack = [&](const LaurentPoly& p) {
    TPoly<RatFunc> out;
    auto parts = p.collect(tv);
    if (parts.empty()) return out;
    int32_t lo = parts.begin()->first, hi = parts.rbegin()->first;
    out.off = lo;
    out.c.assign(static_cast<size_t>(hi - lo + 1), RatFunc::integer(f.vars(), 0));
    for (auto& [k, sub] : parts) out.c[static_cast<size_t>(k - lo)] = RatFunc::from_poly(sub);
    return out;
  };
  return TRat<RatFunc>{pack(f.num()), pack(f.den())};
}

inline SeriesExpansion expand_series(const RatFunc& f, SeriesDir dir, int count) {
  RatFunc like = RatFunc::integer(f.vars(), 0);
  return SeriesExpansion{dir, trat_series(split_t(f), dir, count, like)};
}

// Reassembles a TRat over RatFunc coefficients into a single fraction, using
// the table's "t" variable.
inline RatFunc join_t(const TRat<RatFunc>& f, const VarTablePtr& vars) {
  int tv = vars->index("t");
  if (tv < 0) throw Error(Code::InvalidArgument, "variable table has no 't' variable");
  auto unpack = [&](const TPoly<RatFunc>& p) {
    RatFunc acc = RatFunc::integer(vars, 0);
    RatFunc t = RatFunc::variable(vars, tv);
    for (size_t i = 0; i < p.c.size(); ++i)
      acc = acc + p.c[i] * t.pow(p.off + static_cast<int32_t>(i));
    return acc;
  };
  TPoly<RatFunc> den = f.den;
  if (den.is_zero()) throw Error(Code::DivisionByZero, "zero denominator in t");
  return unpack(f.num) / unpack(den);
}

}  // namespace cybmw
