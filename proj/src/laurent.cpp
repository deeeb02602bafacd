#include "cybmw/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cybmw {

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

bool all_zero(const Expvec& e) {
  return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

}  // namespace

LaurentPoly LaurentPoly::integer(VarTablePtr vars, Int c) {
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Expvec(static_cast<size_t>(p.vars_->size()), 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, int index, int32_t exp) {
  if (!vars || index < 0 || index >= vars->size())
    throw Error(Code::IndexOutOfRange, "variable index out of range");
  LaurentPoly p(std::move(vars));
  Expvec e(static_cast<size_t>(p.vars_->size()), 0);
  e[static_cast<size_t>(index)] = exp;
  p.terms_.emplace(std::move(e), Int(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, Expvec e, Int c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != static_cast<size_t>(p.vars_->size()))
    throw Error(Code::SizeMismatch, "exponent vector length does not match variable table");
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && all_zero(terms_.begin()->first);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && all_zero(terms_.begin()->first) && terms_.begin()->second == 1;
}

Int LaurentPoly::constant_term() const {
  Expvec zero(static_cast<size_t>(vars_->size()), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::insert_term(const Expvec& e, Int c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::harmonize(LaurentPoly& a, LaurentPoly& b) {
  if (same_table(a.vars_, b.vars_)) return;
  if (a.vars_->size() == 0 && a.is_constant()) {
    a = LaurentPoly::integer(b.vars_, a.constant_term());
    return;
  }
  if (b.vars_->size() == 0 && b.is_constant()) {
    b = LaurentPoly::integer(a.vars_, b.constant_term());
    return;
  }
  throw Error(Code::ParameterMismatch, "polynomials over different variable tables");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(vars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly a = *this, b = o;
  harmonize(a, b);
  for (const auto& [e, c] : b.terms_) a.insert_term(e, c);
  return a;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly a = *this, b = o;
  harmonize(a, b);
  for (const auto& [e, c] : b.terms_) a.insert_term(e, -c);
  return a;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly a = *this, b = o;
  harmonize(a, b);
  LaurentPoly p(a.vars_);
  const size_t nv = static_cast<size_t>(a.vars_->size());
  Expvec e(nv, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
      p.insert_term(e, ca * cb);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  LaurentPoly p(vars_);
  if (c == 0) return p;
  for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
  return p;
}

LaurentPoly LaurentPoly::shifted(const Expvec& d) const {
  if (d.size() != static_cast<size_t>(vars_->size()))
    throw Error(Code::SizeMismatch, "exponent vector length does not match variable table");
  LaurentPoly p(vars_);
  for (const auto& [e, c] : terms_) {
    Expvec f = e;
    for (size_t i = 0; i < f.size(); ++i) f[i] += d[i];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) {
    if (terms_.size() != 1)
      throw Error(Code::InvalidArgument, "negative power of a non-monomial polynomial");
    const auto& [ev, c] = *terms_.begin();
    if (c != 1 && c != -1)
      throw Error(Code::InvalidArgument, "negative power needs a unit coefficient");
    Expvec f(ev.size());
    for (size_t i = 0; i < ev.size(); ++i) f[i] = static_cast<int32_t>(e * ev[i]);
    Int coeff = (c == 1 || e % 2 == 0) ? Int(1) : Int(-1);
    return monomial(vars_, std::move(f), std::move(coeff));
  }
  LaurentPoly acc = integer(vars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  LaurentPoly a = *this, b = o;
  if (!same_table(a.vars_, b.vars_)) {
    if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
    harmonize(a, b);
  }
  return a.terms_ == b.terms_;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  return terms_ < o.terms_;
}

int32_t LaurentPoly::min_exponent(int v) const {
  int32_t m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int32_t x = e[static_cast<size_t>(v)];
    if (first || x < m) m = x;
    first = false;
  }
  return m;
}

int32_t LaurentPoly::max_exponent(int v) const {
  int32_t m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int32_t x = e[static_cast<size_t>(v)];
    if (first || x > m) m = x;
    first = false;
  }
  return m;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

int LaurentPoly::leading_sign() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second > 0 ? 1 : -1;
}

LaurentPoly LaurentPoly::divided_by_int(const Int& d) const {
  if (d == 0) throw Error(Code::DivisionByZero, "division of polynomial by zero integer");
  LaurentPoly p(vars_);
  for (const auto& [e, c] : terms_) {
    if (c % d != 0) throw Error(Code::Internal, "inexact integer division of coefficients");
    p.terms_.emplace(e, c / d);
  }
  return p;
}

std::map<int32_t, LaurentPoly> LaurentPoly::collect(int v) const {
  if (v < 0 || v >= vars_->size()) throw Error(Code::IndexOutOfRange, "variable index out of range");
  std::map<int32_t, LaurentPoly> out;
  for (const auto& [e, c] : terms_) {
    int32_t k = e[static_cast<size_t>(v)];
    Expvec f = e;
    f[static_cast<size_t>(v)] = 0;
    auto [it, fresh] = out.try_emplace(k, LaurentPoly::zero(vars_));
    it->second.insert_term(f, c);
  }
  return out;
}

LaurentPoly LaurentPoly::lifted_to(const VarTablePtr& vars) const {
  if (same_table(vars_, vars)) return *this;
  if (!is_constant())
    throw Error(Code::ParameterMismatch, "cannot lift a non-constant polynomial to another table");
  return integer(vars, constant_term());
}

std::string term_str(const VarTable& vars, const Expvec& e, const Int& c, bool lead) {
  std::ostringstream os;
  Int a = c < 0 ? Int(-c) : c;
  if (lead) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  std::string factors;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!factors.empty()) factors += "*";
    factors += vars.name(static_cast<int>(i));
    if (e[i] != 1) factors += "^" + std::to_string(e[i]);
  }
  if (factors.empty()) {
    os << a.str();
  } else {
    if (a != 1) os << a.str() << "*";
    os << factors;
  }
  return os.str();
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  // Print from the lexicographically largest monomial downward.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << term_str(*vars_, it->first, it->second, lead);
    lead = false;
  }
  return os.str();
}

}  // namespace cybmw
