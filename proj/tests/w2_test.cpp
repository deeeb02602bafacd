#include "cybmw/w2.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cybmw;
using cybmw_test::thrown_code;

namespace {

RatFunc P(const VarTablePtr& v, const std::string& s) { return RatFunc::parse(v, s); }

void all_pass_or_dump(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    INFO(c.name, ": ", c.residual);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_SUITE("w2") {

TEST_CASE("rank-one module in closed form") {
  auto v = ground_vars(1);
  auto p = symbolic_params(1);
  auto rep = build_w2_rep(p);
  CHECK(rep.Y.at(0, 0) == P(v, "u1"));
  CHECK(rep.E.at(0, 0) == p.delta(0));  // single gamma equals delta_0
  // G is forced to rho^-1 by the untwisting relation; canonical rho is u1.
  CHECK(rep.G.at(0, 0) == P(v, "u1^-1"));
  all_pass_or_dump(check_w2_relations(p, rep));
}

TEST_CASE("rank-two construction details") {
  auto v = ground_vars(2);
  auto p = symbolic_params(2);
  auto rep = build_w2_rep(p);
  auto gam = p.gammas();
  CHECK(rep.Y.at(0, 0) == P(v, "u1"));
  CHECK(rep.Y.at(1, 1) == P(v, "u2"));
  CHECK(rep.Y.at(0, 1) == p.zero());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(rep.E.at(i, j) == gam.gamma[static_cast<size_t>(j)]);
  CHECK(rep.G.at(0, 1) ==
        (k_inv(p.q()) - p.q()) * gam.gamma[1] / (p.one() - P(v, "u1*u2")));

  auto proj = spectral_idempotents(p, rep);
  Matrix<RatFunc> expect =
      (rep.Y + Matrix<RatFunc>::identity(2, p.one()).scaled(p.zero() - P(v, "u2")))
          .scaled(k_inv(P(v, "u1") - P(v, "u2")));
  CHECK(proj[0] == expect);
}

TEST_CASE("defining relations hold symbolically") {
  all_pass_or_dump(w2_verify(symbolic_params(2)));
  // At rank 3 the gcd-free representation of delta(a) for a <= -2 grows
  // double-exponentially (delta(-2) already has ~6.5e4 numerator terms), so
  // the symbolic run trims the moment window there; the full window is
  // exercised exactly at rank <= 2 above and at rank 3 through the exact
  // rational specializations of the next test case.
  all_pass_or_dump(w2_verify(symbolic_params(3), -1, 5));
}

TEST_CASE("defining relations hold at random specializations of higher rank") {
  Rng rng(55001u);
  for (int trial = 0; trial < 20; ++trial) {
    all_pass_or_dump(w2_verify(specialized_params(4, sample_parameters<Rat>(rng, 4))));
    all_pass_or_dump(w2_verify(specialized_params(5, sample_parameters<Rat>(rng, 5))));
  }
  Rng rngm(55002u);
  all_pass_or_dump(w2_verify(specialized_params(3, sample_parameters<Mod61>(rngm, 3))));
}

TEST_CASE("matrix inverse of G agrees with conjugated form") {
  Rng rng(55003u);
  auto p = specialized_params(3, sample_parameters<Rat>(rng, 3));
  auto rep = build_w2_rep(p);
  CHECK(rep.G.inverse() == rep.Y * rep.G * rep.Y);
}

TEST_CASE("diagonal powers") {
  auto v = ground_vars(2);
  auto p = symbolic_params(2);
  auto m = y_power(p, -3);
  CHECK(m.at(0, 0) == P(v, "u1^-3"));
  CHECK(m.at(1, 1) == P(v, "u2^-3"));
  CHECK(m.at(1, 0) == p.zero());
  CHECK(y_power(p, 0) == Matrix<RatFunc>::identity(2, p.one()));
}

TEST_CASE("planted moment failure is reported, not thrown") {
  auto p = symbolic_params(2, "", {{2, "q"}});
  auto checks = w2_verify(p, -3, 3);
  std::vector<std::string> failed;
  for (const Check& c : checks)
    if (!c.pass) failed.push_back(c.name);
  // delta(2) is pinned to q, and the downward recursion consumes delta(2)
  // when producing delta(-2) and delta(-3), so exactly those moments break.
  CHECK(failed == std::vector<std::string>{"moment(a=-3)", "moment(a=-2)", "moment(a=2)"});
}

TEST_CASE("degenerate parameters are rejected") {
  Params<Rat> collide(2, Rat(3), canonical_rho(2, Rat(3), {Rat(2), Rat(2)}),
                      {Rat(2), Rat(2)});
  CHECK(thrown_code([&] { build_w2_rep(collide); }) == Code::DegenerateParameters);
  Rng rng(55004u);
  auto ok = specialized_params(2, sample_parameters<Rat>(rng, 2));
  auto rep = build_w2_rep(ok);
  CHECK(thrown_code([&] { spectral_idempotents(collide, rep); }) ==
        Code::DegenerateParameters);
}

}  // TEST_SUITE
