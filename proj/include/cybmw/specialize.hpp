#pragma once

#include <optional>
#include <random>
#include <vector>

#include "cybmw/scalars.hpp"

namespace cybmw {

// Point at which symbolic expressions are evaluated: one optional value per
// variable of a table.  K is Rat (exact rationals) or Mod61 (modular mode).
template <class K>
struct Assignment {
  VarTablePtr vars;
  std::vector<std::optional<K>> values;

  explicit Assignment(VarTablePtr v)
      : vars(std::move(v)), values(static_cast<size_t>(vars->size())) {}

  void set(int index, K value) {
    if (index < 0 || index >= vars->size())
      throw Error(Code::IndexOutOfRange, "assignment index out of range");
    values[static_cast<size_t>(index)] = std::move(value);
  }
  void set(const std::string& name, K value) {
    int idx = vars->index(name);
    if (idx < 0) throw Error(Code::MissingAssignment, "unknown variable '" + name + "'");
    set(idx, std::move(value));
  }
};

template <class K>
K coeff_to_k(const Int& c, const K& like);

template <>
inline Rat coeff_to_k<Rat>(const Int& c, const Rat&) {
  return Rat(c);
}
template <>
inline Mod61 coeff_to_k<Mod61>(const Int& c, const Mod61&) {
  return Mod61::from_int(c);
}

// Evaluates a Laurent polynomial at the assignment.  Every variable that
// occurs (with nonzero exponent) must be assigned; negative exponents require
// a nonzero value.
template <class K>
K evaluate(const LaurentPoly& p, const Assignment<K>& a) {
  if (!same_table(p.vars(), a.vars) && p.vars()->size() != 0)
    throw Error(Code::ParameterMismatch, "assignment table does not match polynomial");
  K like = a.values.empty() ? K{} : (a.values[0] ? *a.values[0] : K{});
  K acc = make_int<K>(like, 0);
  for (const auto& [e, c] : p.terms()) {
    K term = coeff_to_k<K>(c, like);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!a.values[i])
        throw Error(Code::MissingAssignment,
                    "no value assigned to variable '" + p.vars()->name(static_cast<int>(i)) + "'");
      term = term * k_pow(*a.values[i], e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

// Evaluates a fraction; the denominator must not vanish at the point.
template <class K>
K evaluate(const RatFunc& f, const Assignment<K>& a) {
  K d = evaluate(f.den(), a);
  if (k_is_zero(d))
    throw Error(Code::PoleAtPoint, "denominator vanishes at the specialization point");
  return evaluate(f.num(), a) / d;
}

// --- Seeded random sampling ---------------------------------------------------
// Deterministic source of specialization points: a seeded mt19937_64 drawing
// rationals with numerator and denominator bounded by 1e6, or nonzero
// residues modulo 2^61 - 1.

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  // Nonzero rational, |numerator| <= 1e6, 1 <= denominator <= 1e6.
  Rat rational() {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    long n = 0;
    while (n == 0) n = num(gen_);
    return Rat(n, den(gen_));
  }

  Mod61 residue() {
    std::uniform_int_distribution<uint64_t> d(1, Mod61::P - 1);
    return Mod61(d(gen_));
  }

  uint64_t raw(uint64_t bound) {  // uniform in [0, bound)
    std::uniform_int_distribution<uint64_t> d(0, bound - 1);
    return d(gen_);
  }

 private:
  std::mt19937_64 gen_;
};

template <class K>
K random_scalar(Rng& rng);
template <>
inline Rat random_scalar<Rat>(Rng& rng) {
  return rng.rational();
}
template <>
inline Mod61 random_scalar<Mod61>(Rng& rng) {
  return rng.residue();
}

// Draws q and u_1..u_r avoiding the degenerate locus: q^2 = 1, u_i = 0,
// u_i = u_j for i != j, and u_i u_j = 1 for all i, j (including i = j).
template <class K>
struct SamplePoint {
  K q;
  std::vector<K> u;
};

template <class K>
SamplePoint<K> sample_parameters(Rng& rng, int r) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SamplePoint<K> s;
    s.q = random_scalar<K>(rng);
    K one = make_int<K>(s.q, 1);
    if (s.q * s.q == one) continue;
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) {
      K x = random_scalar<K>(rng);
      if (k_is_zero(x)) ok = false;
      for (int i = 0; i < static_cast<int>(s.u.size()) && ok; ++i)
        if (s.u[static_cast<size_t>(i)] == x || s.u[static_cast<size_t>(i)] * x == one) ok = false;
      if (ok && x * x == one) ok = false;
      if (ok) s.u.push_back(std::move(x));
    }
    if (ok) return s;
  }
  throw Error(Code::Internal, "parameter sampling failed to avoid the degenerate locus");
}

}  // namespace cybmw
