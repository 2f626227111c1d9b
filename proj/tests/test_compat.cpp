#include <doctest.h>

#include "compatlie/compat.hpp"
#include "compatlie/linalg.hpp"
#include "compatlie/sampling.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace compatlie;

namespace {

const std::vector<std::pair<int, int>> kProbes = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}};

bool probes_all_lie(const LieBracket& a, const LieBracket& b) {
  const auto pair = CompatiblePair::unchecked(a, b);
  for (auto [k1, k2] : kProbes)
    if (!validate_bracket(pencil(pair, k1, k2))) return false;
  return true;
}

}  // namespace

TEST_CASE("validate_bracket") {
  CHECK(validate_bracket(LieBracket(3)).ok);
  CHECK(validate_bracket(ex::sl2()).ok);
  CHECK(validate_bracket(ex::n2()).ok);

  // [e1,e2] = e3 + e1, [e1,e3] = e2
  const LieBracket bad = ex::bracket(3, {{0, 1, 2, 1}, {0, 2, 1, 1}, {0, 1, 0, 1}});
  const Vec jac = oracle::jacobiator(bad.cochain(), 0, 1, 2);
  REQUIRE_FALSE(is_zero(jac));
  const Verdict v = validate_bracket(bad);
  REQUIRE_FALSE(v.ok);
  CHECK(v.witness->basis == std::vector<int>{0, 1, 2});
  CHECK(v.witness->value == jac);
}

TEST_CASE("validate_pair and pencils") {
  const LieBracket sl2 = ex::sl2();
  CHECK(validate_pair(sl2, sl2).ok);
  CHECK(validate_pair(sl2, LieBracket(3)).ok);
  const LieBracket a = ex::bracket(2, {{0, 1, 0, 1}});
  const LieBracket b = ex::n2();
  CHECK(validate_pair(a, b).ok);
  CHECK_THROWS_AS(validate_pair(a, sl2), std::invalid_argument);

  const CompatiblePair p(a, b);
  CHECK(pencil(p, 1, 0) == a);
  CHECK(pencil(p, 0, 0) == LieBracket(2));
  const LieBracket s = pencil(p, 1, 1);
  CHECK(s(0, 1) == Vec((Vec(2) << 1, 1).finished()));
  CHECK(validate_bracket(s).ok);
}

TEST_CASE("pair validation agrees with pencil probes") {
  sampling::Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = sampling::random_pair(rng, 2 + trial % 3);
    CHECK(probes_all_lie(p.first(), p.second()));
  }
  // sl2 against conjugates of n2 + 1: both Lie, usually not compatible.
  const LieBracket n2_plus = sampling::direct_sum(ex::n2(), LieBracket(1));
  int incompatible = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Mat t = sampling::random_invertible(rng, 3);
    const LieBracket other(transform(n2_plus.cochain(), t, *inverse(t)));
    REQUIRE(validate_bracket(other).ok);
    const bool nr = validate_pair(ex::sl2(), other).ok;
    CHECK(nr == probes_all_lie(ex::sl2(), other));
    if (!nr) ++incompatible;
  }
  CHECK(incompatible > 0);
  CHECK_THROWS_AS(CompatiblePair(ex::sl2(), ex::bracket(3, {{0, 1, 0, 1}, {1, 2, 1, 1}})), ValidationError);
}

TEST_CASE("basis change preserves compatibility") {
  sampling::Rng rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    const auto p = sampling::random_pair(rng, 2 + trial % 3);
    const Mat t = sampling::random_invertible(rng, p.dim());
    const Mat ti = *inverse(t);
    CHECK(validate_pair(LieBracket(transform(p.first().cochain(), t, ti)),
                        LieBracket(transform(p.second().cochain(), t, ti))).ok);
  }
}

TEST_CASE("representations") {
  const auto n2 = ex::n2_pair();
  const RepPair ad = adjoint_rep(n2);
  CHECK(ad.rho[0] == (Mat(2, 2) << 0, 0, 0, 1).finished());
  CHECK(ad.rho[1] == (Mat(2, 2) << 0, 0, -1, 0).finished());
  CHECK(is_zero(ad.mu[0]));
  CHECK(validate_rep(n2, ad).ok);
  CHECK(validate_rep(n2, RepPair::zero(2, 3)).ok);

  const RepPair sl2_ad = adjoint_rep(ex::sl2_pair());
  CHECK(sl2_ad.rho[0] == Mat(Vec((Vec(3) << 0, 2, -2).finished()).asDiagonal()));

  const auto ab = ex::abelian_pair(2);
  for (const auto& m : adjoint_rep(ab).rho) CHECK(is_zero(m));

  // (pi, pi) with rho = ad and mu = 2 ad.  mu is not even a representation
  // (mu[x,y] = 2 ad, [mu x, mu y] = 4 ad), and the mixed condition fails too:
  // lhs = 3 ad(e2), rhs = 4 [ad(e1), ad(e2)] = 4 ad(e2).
  const CompatiblePair nn(ex::n2(), ex::n2());
  RepPair bad = adjoint_rep(nn);
  for (auto& m : bad.mu) m *= Rational(2);
  const Verdict v = validate_rep(nn, bad);
  REQUIRE_FALSE(v.ok);
  CHECK(v.witness->condition == "mu");
  CHECK(v.witness->basis == std::vector<int>{0, 1});
  const Mat lhs = bad.rho[1] + bad.mu[1];
  const Mat rhs = (bad.rho[0] * bad.mu[1] - bad.mu[1] * bad.rho[0]) - (bad.rho[1] * bad.mu[0] - bad.mu[0] * bad.rho[1]);
  CHECK(lhs - rhs == Mat(-ad.rho[1]));

  // Keep mu a representation but break only the mixed condition.
  RepPair mixed_only{2, ad.rho, {Mat::Zero(2, 2), Mat::Zero(2, 2)}};
  const Verdict vm = validate_rep(CompatiblePair(ex::n2(), LieBracket(2)),
                                  RepPair{2, ad.rho, {Mat::Zero(2, 2), Mat::Identity(2, 2)}});
  REQUIRE_FALSE(vm.ok);
  CHECK(vm.witness->condition == "mixed");
  CHECK(validate_rep(CompatiblePair(ex::n2(), LieBracket(2)), mixed_only).ok);

  CHECK_THROWS_AS(validate_rep(n2, RepPair::zero(3, 1)), std::invalid_argument);

  sampling::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = sampling::random_pair(rng, 1 + trial % 4);
    CHECK(validate_rep(p, adjoint_rep(p)).ok);
    CHECK(validate_rep(p, sampling::coadjoint_rep(p)).ok);
    CHECK(validate_rep(p, sampling::random_rep(rng, p, 3)).ok);
  }
}
