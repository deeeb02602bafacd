#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cybmw/error.hpp"
#include "cybmw/varset.hpp"

namespace cybmw {

// Expression templates are disabled so that arithmetic results are plain
// values; the templated scalar layer relies on operator results having the
// same type as their operands.
using Int =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

// Exponent vector, one entry per variable of the owning table.  May contain
// negative entries (Laurent monomials).
using Expvec = std::vector<int32_t>;

// Multivariate Laurent polynomial with arbitrary-precision integer
// coefficients.  Terms are kept in a map whose key order is lexicographic on
// the exponent vector in table order; this fixed total order drives canonical
// printing and sign normalization.  A poly over the empty table is a plain
// integer constant and lifts automatically to any table in mixed arithmetic.
class LaurentPoly {
 public:
  LaurentPoly() : vars_(empty_vars()) {}

  static LaurentPoly zero(VarTablePtr vars) { return LaurentPoly(std::move(vars)); }
  static LaurentPoly integer(VarTablePtr vars, Int c);
  static LaurentPoly integer(Int c) { return integer(empty_vars(), std::move(c)); }
  // x_i^e as a polynomial.
  static LaurentPoly variable(VarTablePtr vars, int index, int32_t exp = 1);
  static LaurentPoly monomial(VarTablePtr vars, Expvec e, Int c);

  const VarTablePtr& vars() const { return vars_; }
  const std::map<Expvec, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Number of terms.
  size_t size() const { return terms_.size(); }

  // Constant term (coefficient of the all-zero monomial).
  Int constant_term() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Int& c) const;
  // Multiply by the monomial x^e (e may have negative entries).
  LaurentPoly shifted(const Expvec& e) const;
  LaurentPoly pow(long e) const;  // e >= 0, or any e when *this is a monomial

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  // Total order compatible with the monomial order; used for canonical maps.
  bool operator<(const LaurentPoly& o) const;

  // Smallest / largest exponent of variable v over all terms (0 when zero).
  int32_t min_exponent(int v) const;
  int32_t max_exponent(int v) const;

  // gcd of the absolute values of all coefficients; 0 for the zero poly.
  Int content() const;
  // Sign of the coefficient of the lexicographically largest monomial.
  int leading_sign() const;
  // Divide every coefficient by d (must divide exactly).
  LaurentPoly divided_by_int(const Int& d) const;

  // Collect coefficients of powers of variable v: result[k] holds the
  // sub-polynomial (over the same table, with v's exponent zeroed) of v^k.
  std::map<int32_t, LaurentPoly> collect(int v) const;

  std::string str() const;

  // Rebuild the same constant polynomial over another table.  Throws unless
  // this poly is constant or the tables already agree.
  LaurentPoly lifted_to(const VarTablePtr& vars) const;

 private:
  explicit LaurentPoly(VarTablePtr vars) : vars_(std::move(vars)) {}
  void insert_term(const Expvec& e, Int c);
  static void harmonize(LaurentPoly& a, LaurentPoly& b);

  VarTablePtr vars_;
  std::map<Expvec, Int> terms_;
};

// Renders one monomial term in canonical text form, e.g. "-3*q^2*u1^-1".
std::string term_str(const VarTable& vars, const Expvec& e, const Int& c, bool lead);

}  // namespace cybmw
