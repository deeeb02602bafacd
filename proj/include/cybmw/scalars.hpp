#pragma once

#include <cstdint>
#include <string>

#include "cybmw/ratfunc.hpp"

namespace cybmw {

// Prime field of size 2^61 - 1 (a Mersenne prime), the fixed modulus for
// modular randomized verification.
struct Mod61 {
  static constexpr uint64_t P = 2305843009213693951ull;

  uint64_t v = 0;

  Mod61() = default;
  explicit Mod61(uint64_t x) : v(x % P) {}
  static Mod61 from_long(long long x) {
    long long m = x % static_cast<long long>(P);
    if (m < 0) m += static_cast<long long>(P);
    return Mod61(static_cast<uint64_t>(m));
  }
  static Mod61 from_int(const Int& x) {
    Int m = x % Int(P);
    if (m < 0) m += Int(P);
    return Mod61(static_cast<uint64_t>(m));
  }

  Mod61 operator-() const { return Mod61(v == 0 ? 0 : P - v); }
  Mod61 operator+(Mod61 o) const {
    uint64_t s = v + o.v;
    if (s >= P) s -= P;
    return Mod61(s);
  }
  Mod61 operator-(Mod61 o) const { return *this + (-o); }
  Mod61 operator*(Mod61 o) const {
    unsigned __int128 p = static_cast<unsigned __int128>(v) * o.v;
    return Mod61(static_cast<uint64_t>(p % P));
  }
  Mod61 inverse() const {
    if (v == 0) throw Error(Code::DivisionByZero, "inverse of zero residue");
    // Fermat: v^(P-2).
    Mod61 acc(1), base = *this;
    uint64_t e = P - 2;
    while (e) {
      if (e & 1ull) acc = acc * base;
      base = base * base;
      e >>= 1ull;
    }
    return acc;
  }
  Mod61 operator/(Mod61 o) const { return *this * o.inverse(); }
  Mod61& operator+=(Mod61 o) { return *this = *this + o; }
  Mod61& operator-=(Mod61 o) { return *this = *this - o; }
  Mod61& operator*=(Mod61 o) { return *this = *this * o; }
  Mod61& operator/=(Mod61 o) { return *this = *this / o; }
  bool operator==(Mod61 o) const { return v == o.v; }
  bool operator!=(Mod61 o) const { return v != o.v; }
};

// --- Uniform scalar interface -------------------------------------------------
// The math layer is templated over the scalar field K.  Constants must be
// derived from an existing value ("like") because RatFunc constants carry a
// variable table.

template <class K>
K make_int(const K& like, long v);

template <>
inline RatFunc make_int<RatFunc>(const RatFunc& like, long v) {
  return RatFunc::integer(like.vars(), Int(v));
}
template <>
inline Rat make_int<Rat>(const Rat&, long v) {
  return Rat(v);
}
template <>
inline Mod61 make_int<Mod61>(const Mod61&, long v) {
  return Mod61::from_long(v);
}

template <class K>
inline bool k_is_zero(const K& x) {
  return x == make_int<K>(x, 0);
}
template <>
inline bool k_is_zero<RatFunc>(const RatFunc& x) {
  return x.is_zero();
}

template <class K>
inline K k_inv(const K& x) {
  if (k_is_zero(x)) throw Error(Code::DivisionByZero, "inverse of zero");
  return make_int<K>(x, 1) / x;
}

template <class K>
inline K k_pow(const K& x, long e) {
  if (e == 0) return make_int<K>(x, 1);
  K base = e < 0 ? k_inv(x) : x;
  unsigned long k = e < 0 ? 0ul - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  K acc = make_int<K>(x, 1);
  while (k > 0) {
    if (k & 1ul) acc = acc * base;
    k >>= 1ul;
    if (k) base = base * base;
  }
  return acc;
}
template <>
inline RatFunc k_pow<RatFunc>(const RatFunc& x, long e) {
  return x.pow(e);
}

template <class K>
inline std::string k_str(const K& x);

template <>
inline std::string k_str<RatFunc>(const RatFunc& x) {
  return x.str();
}
template <>
inline std::string k_str<Rat>(const Rat& x) {
  return x.str();
}
template <>
inline std::string k_str<Mod61>(const Mod61& x) {
  return std::to_string(x.v);
}

}  // namespace cybmw
