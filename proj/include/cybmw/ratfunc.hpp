#pragma once

#include <optional>
#include <string>

#include "cybmw/laurent.hpp"

namespace cybmw {

// Element of the fraction field of the Laurent polynomial ring.  Stored as an
// unreduced numerator/denominator pair: no multivariate gcd is ever computed.
// Normalization only divides out the joint integer content, forces the
// denominator's leading coefficient positive, and canonicalizes zero to 0/1.
// Equality is decided by cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(), den_(LaurentPoly::integer(Int(1))) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc from_poly(LaurentPoly p);
  static RatFunc integer(VarTablePtr vars, Int c) {
    return from_poly(LaurentPoly::integer(std::move(vars), std::move(c)));
  }
  static RatFunc rational(VarTablePtr vars, const Rat& v);
  static RatFunc variable(VarTablePtr vars, int index, int32_t exp = 1) {
    return from_poly(LaurentPoly::variable(std::move(vars), index, exp));
  }
  // Parses the textual expression grammar (+ - * / ^ and parentheses) over
  // the given table.  Throws Error(Code::Parse) on malformed input.
  static RatFunc parse(const VarTablePtr& vars, const std::string& text);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarTablePtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return equals(*this, RatFunc::integer(vars(), 1)); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;
  RatFunc pow(long e) const;

  // a/b == c/d  iff  a*d == c*b.
  static bool equals(const RatFunc& a, const RatFunc& b);
  bool operator==(const RatFunc& o) const { return equals(*this, o); }
  bool operator!=(const RatFunc& o) const { return !equals(*this, o); }

  // When both numerator and denominator are integer constants, their ratio.
  std::optional<Rat> constant_value() const;

  std::string str() const;

 private:
  void normalize();

  LaurentPoly num_, den_;
};

}  // namespace cybmw
