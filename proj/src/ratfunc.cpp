#include "cybmw/ratfunc.hpp"

#include <cctype>
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

}  // namespace

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Code::DivisionByZero, "zero denominator");
  normalize();
}

RatFunc RatFunc::from_poly(LaurentPoly p) {
  RatFunc f;
  f.num_ = std::move(p);
  f.den_ = LaurentPoly::integer(f.num_.vars(), 1);
  f.normalize();
  return f;
}

RatFunc RatFunc::rational(VarTablePtr vars, const Rat& v) {
  return RatFunc(LaurentPoly::integer(vars, numerator(v)),
                 LaurentPoly::integer(std::move(vars), denominator(v)));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::integer(num_.vars(), 1);
    return;
  }
  if (!same_table(num_.vars(), den_.vars())) {
    if (num_.vars()->size() == 0)
      num_ = num_.lifted_to(den_.vars());
    else
      den_ = den_.lifted_to(num_.vars());
  }
  if (den_.leading_sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = int_gcd(num_.content(), den_.content());
  if (g > 1) {
    num_ = num_.divided_by_int(g);
    den_ = den_.divided_by_int(g);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.num_ = -f.num_;
  return f;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  // Equal denominators (by exact term comparison) keep the denominator fixed;
  // this is what stops denominator blowup in the long recursions.
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) throw Error(Code::DivisionByZero, "division by zero fraction");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw Error(Code::DivisionByZero, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc::integer(vars(), 1);
  RatFunc base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  RatFunc acc = RatFunc::integer(vars(), 1);
  while (k > 0) {
    if (k & 1ul) acc = acc * base;
    k >>= 1ul;
    if (k) base = base * base;
  }
  return acc;
}

bool RatFunc::equals(const RatFunc& a, const RatFunc& b) {
  if (a.num_.is_zero()) return b.num_.is_zero();
  if (b.num_.is_zero()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  if (a.num_ == b.num_) return a.den_ == b.den_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<Rat> RatFunc::constant_value() const {
  if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
  return Rat(num_.constant_term(), den_.constant_term());
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Expression parser: expr := term (('+'|'-') term)*
//                    term := unary (('*'|'/') unary)*
//                    unary := ('+'|'-')* power
//                    power := atom ('^' signed-int)?
//                    atom := integer | name | '(' expr ')'

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    char c = peek();
    if (i < s.size()) ++i;
    return c;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Code::Parse, "parse error at offset " + std::to_string(i) + ": " + why);
  }
};

class Parser {
 public:
  Parser(const VarTablePtr& vars, const std::string& text) : vars_(vars), lex_(text) {}

  RatFunc run() {
    RatFunc v = expr();
    if (lex_.peek() != '\0') lex_.fail("trailing input");
    return v;
  }

 private:
  RatFunc expr() {
    RatFunc v = term();
    for (char c = lex_.peek(); c == '+' || c == '-'; c = lex_.peek()) {
      lex_.get();
      RatFunc rhs = term();
      v = c == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  RatFunc term() {
    RatFunc v = unary();
    for (char c = lex_.peek(); c == '*' || c == '/'; c = lex_.peek()) {
      lex_.get();
      RatFunc rhs = unary();
      v = c == '*' ? v * rhs : v / rhs;
    }
    return v;
  }

  RatFunc unary() {
    bool neg = false;
    for (char c = lex_.peek(); c == '+' || c == '-'; c = lex_.peek()) {
      if (c == '-') neg = !neg;
      lex_.get();
    }
    RatFunc v = power();
    return neg ? -v : v;
  }

  RatFunc power() {
    RatFunc v = atom();
    if (lex_.peek() == '^') {
      lex_.get();
      long e = signed_int();
      v = v.pow(e);
    }
    return v;
  }

  long signed_int() {
    long sign = 1;
    char c = lex_.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      lex_.get();
      c = lex_.peek();
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) lex_.fail("expected integer exponent");
    long v = 0;
    while (lex_.i < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.i]))) {
      v = v * 10 + (lex_.s[lex_.i] - '0');
      if (v > 1000000) lex_.fail("exponent too large");
      ++lex_.i;
    }
    return sign * v;
  }

  RatFunc atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.get();
      RatFunc v = expr();
      if (lex_.peek() != ')') lex_.fail("expected ')'");
      lex_.get();
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v = 0;
      while (lex_.i < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.i]))) {
        v = v * 10 + (lex_.s[lex_.i] - '0');
        ++lex_.i;
      }
      return RatFunc::integer(vars_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (lex_.i < lex_.s.size() &&
             (std::isalnum(static_cast<unsigned char>(lex_.s[lex_.i])) || lex_.s[lex_.i] == '_')) {
        name += lex_.s[lex_.i];
        ++lex_.i;
      }
      int idx = vars_->index(name);
      if (idx < 0) lex_.fail("unknown variable '" + name + "'");
      return RatFunc::variable(vars_, idx);
    }
    lex_.fail("unexpected character");
  }

  const VarTablePtr& vars_;
  Lexer lex_;
};

}  // namespace

RatFunc RatFunc::parse(const VarTablePtr& vars, const std::string& text) {
  return Parser(vars, text).run();
}

}  // namespace cybmw
