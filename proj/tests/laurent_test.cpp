#include <random>

#include "cybmw/laurent.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cybmw;
using cybmw_test::thrown_code;

namespace {

LaurentPoly rand_poly(const VarTablePtr& vars, std::mt19937& gen) {
  std::uniform_int_distribution<int> nterms(0, 3), expd(-2, 2), coeffd(1, 9), sign(0, 1);
  LaurentPoly p = LaurentPoly::zero(vars);
  int n = nterms(gen);
  for (int i = 0; i < n; ++i) {
    Expvec e(static_cast<size_t>(vars->size()), 0);
    for (auto& x : e) x = static_cast<int32_t>(expd(gen));
    Int c = coeffd(gen) * (sign(gen) ? 1 : -1);
    p += LaurentPoly::monomial(vars, e, c);
  }
  return p;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("constants, variables, printing") {
  auto v = ground_vars(1);  // q, u1, t
  CHECK(LaurentPoly::zero(v).is_zero());
  CHECK(LaurentPoly::integer(v, Int(5)).constant_term() == Int(5));
  LaurentPoly one = LaurentPoly::integer(v, Int(1));
  LaurentPoly q = LaurentPoly::variable(v, 0);
  LaurentPoly u1 = LaurentPoly::variable(v, 1);
  CHECK(q.str() == "q");
  CHECK((q * q - one).str() == "q^2 - 1");
  CHECK((-q).str() == "-q");
  CHECK(LaurentPoly::variable(v, 1, -1).str() == "u1^-1");
  CHECK((q * u1.scaled(Int(2))).str() == "2*q*u1");
  CHECK((q + u1) * (q - u1) == q * q - u1 * u1);
  CHECK(one.is_one());
  CHECK(one.is_constant());
  CHECK_FALSE(q.is_constant());
}

TEST_CASE("ring axioms hold on random triples") {
  auto v = ground_vars(2);
  std::mt19937 gen(20240817u);
  for (int trial = 0; trial < 1000; ++trial) {
    LaurentPoly a = rand_poly(v, gen), b = rand_poly(v, gen), c = rand_poly(v, gen);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("powers") {
  auto v = ground_vars(1);
  LaurentPoly q = LaurentPoly::variable(v, 0);
  LaurentPoly u1 = LaurentPoly::variable(v, 1);
  LaurentPoly s = q + u1;
  CHECK(s.pow(0).is_one());
  CHECK(s.pow(3) == s * s * s);
  // Negative powers exist exactly for unit-coefficient monomials.
  LaurentPoly m = LaurentPoly::monomial(v, {1, -1, 0}, Int(1));
  CHECK(m.pow(-2) == LaurentPoly::monomial(v, {-2, 2, 0}, Int(1)));
  CHECK(LaurentPoly::monomial(v, {1, 0, 0}, Int(-1)).pow(-3) ==
        LaurentPoly::monomial(v, {-3, 0, 0}, Int(-1)));
  CHECK(thrown_code([&] { s.pow(-1); }) == Code::InvalidArgument);
  CHECK(thrown_code([&] { q.scaled(Int(2)).pow(-1); }) == Code::InvalidArgument);
}

TEST_CASE("shift, collect, exponent ranges") {
  auto v = ground_vars(1);
  LaurentPoly q = LaurentPoly::variable(v, 0);
  LaurentPoly u1 = LaurentPoly::variable(v, 1);
  LaurentPoly t = LaurentPoly::variable(v, 2);
  CHECK(q.shifted({0, 2, 0}) == q * u1 * u1);

  LaurentPoly p = q * q * t * t + q * t * t + u1;
  auto parts = p.collect(2);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(0) == u1);
  CHECK(parts.at(2) == q * q + q);

  LaurentPoly m = LaurentPoly::monomial(v, {2, -3, 0}, Int(1)) +
                  LaurentPoly::monomial(v, {-1, 0, 0}, Int(4));
  CHECK(m.min_exponent(0) == -1);
  CHECK(m.max_exponent(0) == 2);
  CHECK(m.min_exponent(1) == -3);
  CHECK(m.max_exponent(1) == 0);
}

TEST_CASE("content, leading sign, exact integer division") {
  auto v = ground_vars(1);
  LaurentPoly q = LaurentPoly::variable(v, 0);
  LaurentPoly p = q.scaled(Int(6)) - LaurentPoly::integer(v, Int(4));
  CHECK(p.content() == Int(2));
  CHECK(p.leading_sign() == 1);
  CHECK((-p).leading_sign() == -1);
  CHECK(p.divided_by_int(Int(2)) == q.scaled(Int(3)) - LaurentPoly::integer(v, Int(2)));
  CHECK(LaurentPoly::zero(v).content() == Int(0));
}

TEST_CASE("total order is consistent") {
  auto v = ground_vars(1);
  std::mt19937 gen(7u);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = rand_poly(v, gen), b = rand_poly(v, gen);
    if (a == b) {
      CHECK_FALSE(a < b);
      CHECK_FALSE(b < a);
    } else {
      CHECK((a < b) != (b < a));
    }
  }
}

TEST_CASE("constants lift across tables, non-constants do not") {
  auto small = ground_vars(1);
  auto big = ground_vars(3);
  LaurentPoly c = LaurentPoly::integer(small, Int(7));
  CHECK(c.lifted_to(big).constant_term() == Int(7));
  LaurentPoly q_small = LaurentPoly::variable(small, 0);
  CHECK(thrown_code([&] { q_small.lifted_to(big); }) == Code::ParameterMismatch);
  // Mixed arithmetic with table-free integer constants lifts automatically.
  CHECK(LaurentPoly::integer(Int(2)) + q_small == q_small + LaurentPoly::integer(small, Int(2)));
  CHECK(thrown_code([&] { (void)(q_small + LaurentPoly::variable(big, 0)); }) ==
        Code::ParameterMismatch);
}

}  // TEST_SUITE
