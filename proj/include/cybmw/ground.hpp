#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cybmw/matrix.hpp"
#include "cybmw/series.hpp"
#include "cybmw/specialize.hpp"

namespace cybmw {

// Outcome of a single named relation check; residual is the simplified value
// that should have been zero.
struct Check {
  std::string name;
  bool pass = false;
  std::string residual;
};

inline bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

enum class DeltaSource {
  ClosedForm,        // sum_j gamma_j u_j^a
  ForwardRecursion,  // delta_a = -sum_j a_j delta_{a-r+j}
  NegativeRecursion, // recursion defining delta_{-j} from positive entries
  TriangularSolve,   // unitriangular system from the linear trace constraints
  GroundRelation,    // delta_0 = (rho^-1 - rho)/(q^-1 - q) + 1
  Explicit,          // supplied in the parameter input
};

inline const char* delta_source_name(DeltaSource s) {
  switch (s) {
    case DeltaSource::ClosedForm: return "closed-form";
    case DeltaSource::ForwardRecursion: return "forward-recursion";
    case DeltaSource::NegativeRecursion: return "negative-recursion";
    case DeltaSource::TriangularSolve: return "triangular-solve";
    case DeltaSource::GroundRelation: return "ground-relation";
    case DeltaSource::Explicit: return "explicit";
  }
  return "unknown";
}

// --- Elementary symmetric building blocks ------------------------------------

// All signed coefficients a_0..a_r of prod_j (x - u_j), i.e.
// a_j = (-1)^(r-j) e_{r-j}(u).  a_r = 1 and a_0 = (-1)^r prod u_j.
template <class K>
std::vector<K> signed_elementary_all(const K& like, const std::vector<K>& u) {
  const int r = static_cast<int>(u.size());
  std::vector<K> e(static_cast<size_t>(r) + 1, make_int<K>(like, 0));
  e[0] = make_int<K>(like, 1);
  for (int i = 0; i < r; ++i)
    for (int k = i + 1; k >= 1; --k)
      e[static_cast<size_t>(k)] = e[static_cast<size_t>(k)] + u[static_cast<size_t>(i)] * e[static_cast<size_t>(k - 1)];
  std::vector<K> a;
  a.reserve(static_cast<size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) {
    K v = e[static_cast<size_t>(r - j)];
    if ((r - j) % 2 != 0) v = -v;
    a.push_back(std::move(v));
  }
  return a;
}

template <class K>
K signed_elementary(const K& like, const std::vector<K>& u, int j) {
  if (j < 0 || j > static_cast<int>(u.size()))
    throw Error(Code::IndexOutOfRange, "signed elementary index out of range [0, r]");
  return signed_elementary_all(like, u)[static_cast<size_t>(j)];
}

// prod u_j when r is odd; q^-1 prod u_j when r is even.
template <class K>
K canonical_rho(int r, const K& q, const std::vector<K>& u) {
  if (static_cast<int>(u.size()) != r) throw Error(Code::SizeMismatch, "u list has wrong length");
  K p = make_int<K>(q, 1);
  for (const auto& x : u) p = p * x;
  if (r % 2 == 0) p = p * k_inv(q);
  return p;
}

template <class K>
struct Gammas {
  std::vector<K> gamma;  // gamma_j
  std::vector<K> part1;  // rho-independent part entering with 1/(rho (q^-1 - q))
  std::vector<K> part2;  // rho-independent additive part
};

// --- Parameter system ---------------------------------------------------------

// A ground parameter system: rank r, the braiding parameter q, the twist rho,
// eigenvalue parameters u_1..u_r, and the derived two-strand trace parameters
// delta_a for a in Z.  delta values may also be supplied explicitly (to probe
// perturbed systems); otherwise they are derived on demand, with the source of
// each memoized entry recorded for audit output.
template <class K>
class Params {
 public:
  Params(int r, K q, K rho, std::vector<K> u, std::map<long, K> delta_override = {})
      : r_(r),
        q_(std::move(q)),
        rho_(std::move(rho)),
        u_(std::move(u)),
        override_(std::move(delta_override)),
        cache_(std::make_shared<Cache>()) {
    if (r_ < 1) throw Error(Code::InvalidArgument, "rank must be at least 1");
    if (static_cast<int>(u_.size()) != r_)
      throw Error(Code::SizeMismatch, "u list length does not match rank");
  }

  int r() const { return r_; }
  const K& q() const { return q_; }
  const K& rho() const { return rho_; }
  const std::vector<K>& u() const { return u_; }
  const std::map<long, K>& delta_override() const { return override_; }

  K one() const { return make_int<K>(q_, 1); }
  K zero() const { return make_int<K>(q_, 0); }

  // prod_j u_j
  K p_product() const {
    K p = one();
    for (const auto& x : u_) p = p * x;
    return p;
  }

  bool rho_is_canonical() const { return rho_ == canonical_rho(r_, q_, u_); }

  const std::vector<K>& signed_elem() const {
    std::lock_guard<std::mutex> lk(cache_->m);
    if (!cache_->elem) cache_->elem = signed_elementary_all(q_, u_);
    return *cache_->elem;
  }

  // Nonempty when the generic-position preconditions fail: pairwise-distinct
  // nonzero u with u_i u_j != 1, q^2 != 1, rho != 0.
  const std::string& precondition_violation() const {
    {
      std::lock_guard<std::mutex> lk(cache_->m);
      if (cache_->precond) return *cache_->precond;
    }
    std::string msg = compute_precondition_violation();
    std::lock_guard<std::mutex> lk(cache_->m);
    if (!cache_->precond) cache_->precond = std::move(msg);
    return *cache_->precond;
  }
  bool preconditions_ok() const { return precondition_violation().empty(); }

  const Gammas<K>& gammas() const;

  // Memoized two-sided delta sequence; source recorded per entry.
  K delta(long a) const;
  DeltaSource delta_source(long a) const {
    delta(a);
    std::lock_guard<std::mutex> lk(cache_->m);
    return cache_->delta.at(a).second;
  }

 private:
  struct Cache {
    std::mutex m;
    std::map<long, std::pair<K, DeltaSource>> delta;
    std::optional<Gammas<K>> gam;
    std::optional<std::vector<K>> elem;
    std::optional<std::vector<K>> tri;
    std::optional<std::string> precond;
  };

  std::string compute_precondition_violation() const {
    K one_v = one();
    if (k_is_zero(rho_)) return "rho = 0";
    if (k_is_zero(q_)) return "q = 0";
    if (q_ * q_ == one_v) return "q^2 = 1";
    for (int i = 0; i < r_; ++i) {
      if (k_is_zero(u_[static_cast<size_t>(i)])) return "u" + std::to_string(i + 1) + " = 0";
      for (int j = i; j < r_; ++j) {
        if (i != j && u_[static_cast<size_t>(i)] == u_[static_cast<size_t>(j)])
          return "u" + std::to_string(i + 1) + " = u" + std::to_string(j + 1);
        if (u_[static_cast<size_t>(i)] * u_[static_cast<size_t>(j)] == one_v)
          return "u" + std::to_string(i + 1) + "*u" + std::to_string(j + 1) + " = 1";
      }
    }
    return "";
  }

  K compute_delta(long a, DeltaSource& src) const;
  const std::vector<K>& triangular_deltas() const;

  int r_;
  K q_, rho_;
  std::vector<K> u_;
  std::map<long, K> override_;
  std::shared_ptr<Cache> cache_;
};

// Unique solution of the linear system
//   sum_j gamma_j / (1 - u_i u_j) = 1/(1 - u_i^2) + 1/(rho (q^-1 - q)),
// in product form, split into the rho-dependent and rho-free parts.
template <class K>
Gammas<K> compute_gammas(const Params<K>& p) {
  if (!p.preconditions_ok())
    throw Error(Code::DegenerateParameters,
                "parameters violate generic-position preconditions: " + p.precondition_violation());
  const int r = p.r();
  const K one = p.one();
  const K qdiff = k_inv(p.q()) - p.q();  // q^-1 - q
  Gammas<K> g;
  for (int j = 0; j < r; ++j) {
    const K& uj = p.u()[static_cast<size_t>(j)];
    K pre = one;         // prod_{l != j} (u_l u_j - 1)/(u_j - u_l)
    K other_prod = one;  // prod_{l != j} u_l
    for (int l = 0; l < r; ++l) {
      if (l == j) continue;
      const K& ul = p.u()[static_cast<size_t>(l)];
      pre = pre * (ul * uj - one) / (uj - ul);
      other_prod = other_prod * ul;
    }
    K part1 = (one - uj * uj) * other_prod * pre;
    K part2 = r % 2 == 1 ? pre : -(uj * pre);
    K gamma = part1 / (p.rho() * qdiff) + part2;
    g.part1.push_back(std::move(part1));
    g.part2.push_back(std::move(part2));
    g.gamma.push_back(std::move(gamma));
  }
  if (p.rho_is_canonical()) {
    // With the canonical twist the solution collapses to a short product; any
    // disagreement here would mean the two derivations diverged.
    const K qq = p.q() - k_inv(p.q());  // q - q^-1
    for (int j = 0; j < r; ++j) {
      const K& uj = p.u()[static_cast<size_t>(j)];
      K head = r % 2 == 1 ? (uj - k_inv(p.q())) : (uj - p.q());
      K simple = p.rho() * head * (uj + p.q()) / (uj * uj * qq);
      for (int l = 0; l < r; ++l) {
        if (l == j) continue;
        const K& ul = p.u()[static_cast<size_t>(l)];
        simple = simple * (uj - k_inv(ul)) / (uj - ul);
      }
      if (!(simple == g.gamma[static_cast<size_t>(j)]))
        throw Error(Code::Internal, "canonical-twist gamma simplification mismatch");
    }
  }
  return g;
}

template <class K>
const Gammas<K>& Params<K>::gammas() const {
  {
    std::lock_guard<std::mutex> lk(cache_->m);
    if (cache_->gam) return *cache_->gam;
  }
  Gammas<K> g = compute_gammas(*this);
  std::lock_guard<std::mutex> lk(cache_->m);
  if (!cache_->gam) cache_->gam = std::move(g);
  return *cache_->gam;
}

// sum_j gamma_j u_j^a, defined for any integer a.
template <class K>
K delta_closed_form(const Params<K>& p, long a) {
  const auto& g = p.gammas();
  K acc = p.zero();
  for (int j = 0; j < p.r(); ++j)
    acc = acc + g.gamma[static_cast<size_t>(j)] * k_pow(p.u()[static_cast<size_t>(j)], a);
  return acc;
}

// delta_{-j} for j >= 1 from the defining recursion
//   delta_{-1} = rho^-2 delta_1,
//   delta_{-j} = rho^-2 delta_j
//              + (q^-1 - q) rho^-1 sum_{k=1}^{j-1} (delta_k delta_{k-j} - delta_{2k-j}).
template <class K>
K delta_negative(const Params<K>& p, long j) {
  if (j < 1) throw Error(Code::IndexOutOfRange, "negative-index recursion needs j >= 1");
  const K rho_inv2 = k_pow(p.rho(), -2);
  if (j == 1) return rho_inv2 * p.delta(1);
  K sum = p.zero();
  for (long k = 1; k <= j - 1; ++k)
    sum = sum + p.delta(k) * p.delta(k - j) - p.delta(2 * k - j);
  return rho_inv2 * p.delta(j) + (k_inv(p.q()) - p.q()) * k_inv(p.rho()) * sum;
}

// delta_a = -sum_{j=0}^{r-1} a_j delta_{a-r+j} for a >= r.
template <class K>
K delta_forward_recursion(const Params<K>& p, long a) {
  if (a < p.r()) throw Error(Code::IndexOutOfRange, "forward recursion needs a >= r");
  const auto& coeff = p.signed_elem();
  K acc = p.zero();
  for (int j = 0; j < p.r(); ++j)
    acc = acc + coeff[static_cast<size_t>(j)] * p.delta(a - p.r() + j);
  return -acc;
}

// Solves the unitriangular linear system formed by the trace constraints for
// delta_1..delta_{r-1}.  a_coeffs is a_0..a_r; the constraint with index l
// involves unknowns delta_1..delta_{r-l} with top coefficient a_r = 1, so
// processing l = r-1 down to 1 is a forward substitution.
template <class K>
std::vector<K> solve_deltas_from_admissibility(const K& rho, const K& q,
                                               const std::vector<K>& a_coeffs) {
  const int r = static_cast<int>(a_coeffs.size()) - 1;
  if (r < 1) throw Error(Code::InvalidArgument, "need coefficients a_0..a_r with r >= 1");
  const K one = make_int<K>(q, 1);
  const K qq = q - k_inv(q);
  if (k_is_zero(qq)) throw Error(Code::DegenerateParameters, "q - q^-1 = 0");
  const K& a0 = a_coeffs[0];
  if (k_is_zero(a0)) throw Error(Code::DegenerateParameters, "a_0 = 0 (some u_j vanishes)");
  std::vector<K> x(static_cast<size_t>(r), make_int<K>(q, 0));  // x_j = (q - q^-1) delta_j
  for (int l = r - 1; l >= 1; --l) {
    auto a = [&](int i) { return a_coeffs[static_cast<size_t>(i)]; };
    K rhs = -(rho * (a(l) - a(r - l) / a0));
    K s2 = make_int<K>(q, 0), s3 = make_int<K>(q, 0);
    for (int j = std::max(l + 1, (r + 1) / 2); j <= (l + r) / 2; ++j) s2 = s2 + a(2 * j - l);
    for (int j = (l + 1) / 2; j <= std::min(l, (r + 1) / 2 - 1); ++j) s3 = s3 + a(2 * j - l);
    rhs = rhs + qq * (s2 - s3);
    for (int j = 1; j <= r - l - 1; ++j) rhs = rhs - a(j + l) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(r - l)] = rhs;  // coefficient a_r = 1
  }
  std::vector<K> deltas;
  deltas.reserve(static_cast<size_t>(r - 1));
  for (int j = 1; j <= r - 1; ++j) deltas.push_back(x[static_cast<size_t>(j)] / qq);
  (void)one;
  return deltas;
}

template <class K>
const std::vector<K>& Params<K>::triangular_deltas() const {
  {
    std::lock_guard<std::mutex> lk(cache_->m);
    if (cache_->tri) return *cache_->tri;
  }
  std::vector<K> d = solve_deltas_from_admissibility(rho_, q_, signed_elem());
  std::lock_guard<std::mutex> lk(cache_->m);
  if (!cache_->tri) cache_->tri = std::move(d);
  return *cache_->tri;
}

template <class K>
K Params<K>::compute_delta(long a, DeltaSource& src) const {
  auto it = override_.find(a);
  if (it != override_.end()) {
    src = DeltaSource::Explicit;
    return it->second;
  }
  if (a < 0) {
    src = DeltaSource::NegativeRecursion;
    return delta_negative(*this, -a);
  }
  if (preconditions_ok()) {
    src = DeltaSource::ClosedForm;
    return delta_closed_form(*this, a);
  }
  if (a == 0) {
    const K qdiff = k_inv(q_) - q_;
    if (k_is_zero(qdiff)) throw Error(Code::DegenerateParameters, "q - q^-1 = 0");
    src = DeltaSource::GroundRelation;
    return (k_inv(rho_) - rho_) / qdiff + one();
  }
  if (a < r_) {
    src = DeltaSource::TriangularSolve;
    return triangular_deltas()[static_cast<size_t>(a - 1)];
  }
  src = DeltaSource::ForwardRecursion;
  return delta_forward_recursion(*this, a);
}

template <class K>
K Params<K>::delta(long a) const {
  {
    std::lock_guard<std::mutex> lk(cache_->m);
    auto it = cache_->delta.find(a);
    if (it != cache_->delta.end()) return it->second.first;
  }
  DeltaSource src = DeltaSource::ClosedForm;
  K v = compute_delta(a, src);
  std::lock_guard<std::mutex> lk(cache_->m);
  auto [it, fresh] = cache_->delta.try_emplace(a, v, src);
  return it->second.first;
}

// --- Admissibility checks -----------------------------------------------------

// sum_{k=0}^r a_k delta_{k+a} = 0 for each a in [lo, hi].
template <class K>
std::vector<Check> check_weak_admissibility(const Params<K>& p, long lo, long hi) {
  const auto& coeff = p.signed_elem();
  std::vector<Check> out;
  for (long a = lo; a <= hi; ++a) {
    K acc = p.zero();
    for (int k = 0; k <= p.r(); ++k)
      acc = acc + coeff[static_cast<size_t>(k)] * p.delta(a + k);
    bool ok = k_is_zero(acc);
    out.push_back({"weak-admissibility(a=" + std::to_string(a) + ")", ok,
                   ok ? "0" : k_str(acc)});
  }
  return out;
}

// The three constraint families characterizing admissibility: the linear
// trace constraints (one per l in 1..r-1), the twist balance, and the delta
// recursion over a tested range of indices.
template <class K>
std::vector<Check> check_wilcox_yu(const Params<K>& p, long rec_lo, long rec_hi) {
  const auto& a = p.signed_elem();
  const int r = p.r();
  const K qq = p.q() - k_inv(p.q());
  std::vector<Check> out;
  const K& a0 = a[0];
  if (k_is_zero(a0)) throw Error(Code::DegenerateParameters, "a_0 = 0 (some u_j vanishes)");
  for (int l = 1; l <= r - 1; ++l) {
    K acc = p.rho() * (a[static_cast<size_t>(l)] - a[static_cast<size_t>(r - l)] / a0);
    K bracket = p.zero();
    for (int j = 1; j <= r - l; ++j)
      bracket = bracket + a[static_cast<size_t>(j + l)] * p.delta(j);
    for (int j = std::max(l + 1, (r + 1) / 2); j <= (l + r) / 2; ++j)
      bracket = bracket - a[static_cast<size_t>(2 * j - l)];
    for (int j = (l + 1) / 2; j <= std::min(l, (r + 1) / 2 - 1); ++j)
      bracket = bracket + a[static_cast<size_t>(2 * j - l)];
    acc = acc + qq * bracket;
    bool ok = k_is_zero(acc);
    out.push_back({"trace-constraint(l=" + std::to_string(l) + ")", ok, ok ? "0" : k_str(acc)});
  }
  {
    K acc = k_inv(p.rho()) * a0 - p.rho() * k_inv(a0);
    if (r % 2 == 0) acc = acc - qq;
    bool ok = k_is_zero(acc);
    out.push_back({"twist-balance", ok, ok ? "0" : k_str(acc)});
  }
  for (long idx = rec_lo; idx <= rec_hi; ++idx) {
    if (idx < r) continue;
    K acc = p.delta(idx) - delta_forward_recursion(p, idx);
    bool ok = k_is_zero(acc);
    out.push_back({"delta-recursion(a=" + std::to_string(idx) + ")", ok, ok ? "0" : k_str(acc)});
  }
  return out;
}

struct AdmissibilityReport {
  bool preconditions_ok = false;
  std::string precondition_message;
  bool rho_canonical = false;
  std::vector<Check> weak;
  std::vector<Check> relations;
  std::vector<Check> ground;  // ground-ring axiom and closed-form agreement
  bool weakly_admissible = false;
  bool relations_pass = false;
  bool u_admissible = false;
};

template <class K>
AdmissibilityReport admissibility_report(const Params<K>& p, long window) {
  if (window < 0) throw Error(Code::InvalidArgument, "negative admissibility window");
  AdmissibilityReport rep;
  rep.preconditions_ok = p.preconditions_ok();
  rep.precondition_message = p.precondition_violation();
  rep.rho_canonical = p.rho_is_canonical();
  const long r = p.r();
  rep.weak = check_weak_admissibility(p, -std::max(r, window), std::max(r, window));
  rep.relations = check_wilcox_yu(p, r, 2 * r);
  rep.weakly_admissible = all_pass(rep.weak);
  rep.relations_pass = all_pass(rep.relations);
  {
    const K qdiff = k_inv(p.q()) - p.q();
    K acc = p.delta(0) - ((k_inv(p.rho()) - p.rho()) / qdiff + p.one());
    bool ok = k_is_zero(acc);
    rep.ground.push_back({"ground-relation", ok, ok ? "0" : k_str(acc)});
  }
  bool closed_ok = rep.preconditions_ok;
  if (rep.preconditions_ok) {
    for (long a = -r; a <= std::max(2 * r, window); ++a) {
      K acc = p.delta(a) - delta_closed_form(p, a);
      bool ok = k_is_zero(acc);
      if (!ok) closed_ok = false;
      rep.ground.push_back(
          {"closed-form-agreement(a=" + std::to_string(a) + ")", ok, ok ? "0" : k_str(acc)});
    }
  }
  rep.u_admissible = rep.preconditions_ok && closed_ok && rep.ground[0].pass;
  return rep;
}

// --- Generating functions -----------------------------------------------------

// G(t) = prod_l (t - u_l)/(t u_l - 1) as a rational function in t.
template <class K>
TRat<K> G_poly(const Params<K>& p) {
  const K one = p.one();
  TRat<K> acc = trat_constant(one, one);
  for (const auto& ul : p.u()) {
    TRat<K> f{tpoly_from<K>({-ul, one}), tpoly_from<K>({-one, ul})};
    acc = trat_mul(acc, f, one);
  }
  return acc;
}

// G(1/t) = prod_l (t u_l - 1)/(t - u_l).
template <class K>
TRat<K> G_inv_poly(const Params<K>& p) {
  const K one = p.one();
  TRat<K> acc = trat_constant(one, one);
  for (const auto& ul : p.u()) {
    TRat<K> f{tpoly_from<K>({-one, ul}), tpoly_from<K>({-ul, one})};
    acc = trat_mul(acc, f, one);
  }
  return acc;
}

// Coefficient of t^a in the expansion of G(t) around t = 0.
template <class K>
K mu_coeff(const Params<K>& p, long a) {
  if (a < 0) throw Error(Code::IndexOutOfRange, "series coefficient index must be >= 0");
  auto c = trat_series(G_poly(p), SeriesDir::AtZero, static_cast<int>(a) + 1, p.one());
  return c[static_cast<size_t>(a)];
}

// A(t) = rho^-1 p/(q - q^-1) + t/(t^2-1)   (r odd)
//      = rho^-1 p/(q - q^-1) - t^2/(t^2-1) (r even)
template <class K>
TRat<K> A_of_t(const Params<K>& p) {
  const K one = p.one();
  const K qq = p.q() - k_inv(p.q());
  if (k_is_zero(qq)) throw Error(Code::DegenerateParameters, "q - q^-1 = 0");
  K head = k_inv(p.rho()) * p.p_product() / qq;
  TRat<K> acc = trat_constant(head, one);
  TPoly<K> den = tpoly_from<K>({-one, make_int<K>(one, 0), one});  // t^2 - 1
  if (p.r() % 2 == 1) {
    TRat<K> tail{tpoly_from<K>({one}, 1), den};
    acc = trat_add(acc, tail, one);
  } else {
    TRat<K> tail{tpoly_from<K>({one}, 2), den};
    acc = trat_sub(acc, tail, one);
  }
  return acc;
}

// Z_1(t) = 1/(rho (q^-1 - q)) + t^2/(t^2 - 1) + A(t) G(1/t); its expansion at
// infinity generates the delta sequence: Z_1(t) = sum_{a >= 0} delta_a t^-a.
template <class K>
TRat<K> Z1_closed(const Params<K>& p) {
  const K one = p.one();
  const K qdiff = k_inv(p.q()) - p.q();
  if (k_is_zero(qdiff)) throw Error(Code::DegenerateParameters, "q - q^-1 = 0");
  TRat<K> acc = trat_constant(k_inv(p.rho() * qdiff), one);
  TPoly<K> den = tpoly_from<K>({-one, make_int<K>(one, 0), one});
  acc = trat_add(acc, TRat<K>{tpoly_from<K>({one}, 2), den}, one);
  acc = trat_add(acc, trat_mul(A_of_t(p), G_inv_poly(p), one), one);
  return acc;
}

// delta_a assembled from the at-zero coefficients mu_b of G(t):
//   r odd:  delta_a = [a=0] rho^-1/(q^-1-q) + [a even]
//                   + mu_a rho^-1 p/(q-q^-1) + mu_{a-1} + mu_{a-3} + ...
//   r even: delta_a = [a=0] rho^-1/(q^-1-q) + [a even]
//                   + mu_a rho^-1 p/(q-q^-1) - mu_a - mu_{a-2} - ...
// The [a=0] term carries q^-1 - q in the denominator: that is the sign forced
// by the closed form of Z_1(t), and the rank-one case confirms it
// (delta_0 = (u_1 - u_1^-1)/(q - q^-1) + 1).
template <class K>
K delta_via_mu(const Params<K>& p, long a) {
  if (a < 0) throw Error(Code::IndexOutOfRange, "mu-form delta needs a >= 0");
  const K qq = p.q() - k_inv(p.q());
  auto mus = trat_series(G_poly(p), SeriesDir::AtZero, static_cast<int>(a) + 1, p.one());
  K acc = p.zero();
  if (a == 0) acc = acc - k_inv(p.rho()) / qq;
  if (a % 2 == 0) acc = acc + p.one();
  acc = acc + mus[static_cast<size_t>(a)] * k_inv(p.rho()) * p.p_product() / qq;
  if (p.r() % 2 == 1) {
    for (long m = a - 1; m >= 0; m -= 2) acc = acc + mus[static_cast<size_t>(m)];
  } else {
    for (long m = a; m >= 0; m -= 2) acc = acc - mus[static_cast<size_t>(m)];
  }
  return acc;
}

// --- Symmetric-function identities behind the gamma solution ------------------

template <class K>
std::vector<Check> check_cauchy_and_residue_identities(const Params<K>& p) {
  if (!p.preconditions_ok())
    throw Error(Code::DegenerateParameters,
                "parameters violate generic-position preconditions: " + p.precondition_violation());
  const int r = p.r();
  const K one = p.one();
  std::vector<Check> out;
  {
    // det(1/(1 - u_i u_j)) = prod_{i<j} (u_i - u_j)^2 / prod_{i,j} (1 - u_i u_j)
    Matrix<K> m(r, r, p.zero());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        m.at(i, j) = k_inv(one - p.u()[static_cast<size_t>(i)] * p.u()[static_cast<size_t>(j)]);
    K lhs = m.determinant();
    K rhs = one;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        K d = p.u()[static_cast<size_t>(i)] - p.u()[static_cast<size_t>(j)];
        rhs = rhs * d * d;
      }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        rhs = rhs / (one - p.u()[static_cast<size_t>(i)] * p.u()[static_cast<size_t>(j)]);
    K acc = lhs - rhs;
    bool ok = k_is_zero(acc);
    out.push_back({"cauchy-determinant", ok, ok ? "0" : k_str(acc)});
  }
  for (int i = 0; i < r; ++i) {
    // sum_j prod_{l != i} (u_l u_j - 1) prod_{l != j} u_l/(u_j - u_l) = 1
    K acc = -one;
    for (int j = 0; j < r; ++j) {
      K term = one;
      for (int l = 0; l < r; ++l) {
        if (l != i)
          term = term * (p.u()[static_cast<size_t>(l)] * p.u()[static_cast<size_t>(j)] - one);
        if (l != j)
          term = term * p.u()[static_cast<size_t>(l)] /
                 (p.u()[static_cast<size_t>(j)] - p.u()[static_cast<size_t>(l)]);
      }
      acc = acc + term;
    }
    bool ok = k_is_zero(acc);
    out.push_back({"residue-normalization(i=" + std::to_string(i + 1) + ")", ok,
                   ok ? "0" : k_str(acc)});
  }
  for (int i = 0; i < r; ++i) {
    // sum_j (1-u_i^2)/(1-u_i u_j) prod_{l != j} (u_l u_j - 1)/(u_j - u_l) = 1
    // (r odd); with an extra factor -u_j in each summand when r is even.
    const K& ui = p.u()[static_cast<size_t>(i)];
    K acc = -one;
    for (int j = 0; j < r; ++j) {
      const K& uj = p.u()[static_cast<size_t>(j)];
      K term = (one - ui * ui) / (one - ui * uj);
      if (r % 2 == 0) term = term * (-uj);
      for (int l = 0; l < r; ++l) {
        if (l == j) continue;
        const K& ul = p.u()[static_cast<size_t>(l)];
        term = term * (ul * uj - one) / (uj - ul);
      }
      acc = acc + term;
    }
    bool ok = k_is_zero(acc);
    out.push_back({"residue-partition(i=" + std::to_string(i + 1) + ")", ok,
                   ok ? "0" : k_str(acc)});
  }
  for (int i = 0; i < r; ++i) {
    // The defining system itself: sum_j gamma_j/(1-u_i u_j) = 1/(1-u_i^2)
    //                                                        + 1/(rho (q^-1 - q)).
    const K& ui = p.u()[static_cast<size_t>(i)];
    const auto& g = p.gammas();
    K acc = -(k_inv(one - ui * ui) + k_inv(p.rho() * (k_inv(p.q()) - p.q())));
    for (int j = 0; j < r; ++j)
      acc = acc + g.gamma[static_cast<size_t>(j)] / (one - ui * p.u()[static_cast<size_t>(j)]);
    bool ok = k_is_zero(acc);
    out.push_back({"gamma-system(i=" + std::to_string(i + 1) + ")", ok, ok ? "0" : k_str(acc)});
  }
  return out;
}

// --- Construction helpers -----------------------------------------------------

// Fully symbolic parameter system over the ring Z[q^{\pm}, u^{\pm}, t]: q and
// u_j are variables and rho is the canonical twist unless an expression is
// given.
inline Params<RatFunc> symbolic_params(int r, const std::string& rho_expr = "",
                                       std::map<long, std::string> delta_override = {}) {
  VarTablePtr vars = ground_vars(r);
  RatFunc q = RatFunc::variable(vars, 0);
  std::vector<RatFunc> u;
  for (int j = 1; j <= r; ++j) u.push_back(RatFunc::variable(vars, j));
  RatFunc rho = rho_expr.empty() ? canonical_rho(r, q, u) : RatFunc::parse(vars, rho_expr);
  std::map<long, RatFunc> over;
  for (auto& [a, expr] : delta_override) over.emplace(a, RatFunc::parse(vars, expr));
  return Params<RatFunc>(r, std::move(q), std::move(rho), std::move(u), std::move(over));
}

// Specialized parameter system at a sampled point, with the canonical twist.
template <class K>
Params<K> specialized_params(int r, const SamplePoint<K>& s) {
  return Params<K>(r, s.q, canonical_rho(r, s.q, s.u), s.u);
}

}  // namespace cybmw
