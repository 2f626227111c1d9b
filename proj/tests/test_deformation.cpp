#include <doctest.h>

#include "compatlie/deformation.hpp"
#include "compatlie/sampling.hpp"
#include "examples.hpp"

using namespace compatlie;

namespace {

Mat diag2(long a, long b) { return (Mat(2, 2) << a, 0, 0, b).finished(); }

}  // namespace

TEST_CASE("infinitesimal deformations") {
  const auto sl2 = ex::sl2_pair();
  CHECK(is_infinitesimal_deformation(sl2, {Cochain(2, 3, 3), Cochain(2, 3, 3)}).ok);
  CHECK(is_infinitesimal_deformation(sl2, {sl2.first().cochain(), sl2.second().cochain()}).ok);

  const auto n2 = ex::n2_pair();
  const DeformationDatum d{ex::bracket(2, {{0, 1, 0, 1}}).cochain(), Cochain(2, 2, 2)};
  CHECK(is_infinitesimal_deformation(n2, d).ok);

  CHECK(deformed_pair(n2, d, 0).first() == n2.first());
  const auto five = deformed_pair(n2, d, 5);
  CHECK(five.first()(0, 1) == Vec((Vec(2) << 5, 1).finished()));

  const auto doubled = deformed_pair(sl2, {sl2.first().cochain(), sl2.second().cochain()}, 1);
  CHECK(doubled.first().cochain() == Rational(2) * sl2.first().cochain());
  CHECK(doubled.second().cochain() == Rational(2) * sl2.second().cochain());

  // A cochain that is not a cocycle on sl2.
  Cochain w(2, 3, 3);
  w.set({0, 1}, unit_vec(3, 0));
  const Verdict v = is_infinitesimal_deformation(sl2, {w, Cochain(2, 3, 3)});
  REQUIRE_FALSE(v.ok);
  CHECK(v.witness->condition == "[pi1,w1]");
  CHECK_THROWS_AS(deformed_pair(sl2, {w, Cochain(2, 3, 3)}, 1), ValidationError);
}

TEST_CASE("NR criterion agrees with probing t") {
  sampling::Rng rng(71);
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto pair = sampling::random_pair(rng, 2 + trial % 2);
    const int n = pair.dim();
    DeformationDatum d;
    switch (trial % 4) {
      case 0:
        d = {sampling::random_cochain(rng, 2, n, n), sampling::random_cochain(rng, 2, n, n)};
        break;
      case 1: {
        const auto other = sampling::random_pair(rng, n);
        d = {other.first().cochain(), other.second().cochain()};
        break;
      }
      case 2:
        d = {sampling::small_int(rng) * pair.first().cochain(), sampling::small_int(rng) * pair.second().cochain()};
        break;
      default:
        d = {pair.second().cochain(), pair.first().cochain()};
        break;
    }
    const bool nr = is_infinitesimal_deformation(pair, d).ok;
    CHECK(nr == check_probes(pair, d).ok);
    if (nr) ++positives;
  }
  CHECK(positives > 5);
}

TEST_CASE("Nijenhuis torsion") {
  const auto sl2 = ex::sl2();
  CHECK(nijenhuis_torsion(sl2, Rational(3) * Mat(Mat::Identity(3, 3))).is_zero());
  sampling::Rng rng(73);
  CHECK(nijenhuis_torsion(LieBracket(3), sampling::random_matrix(rng, 3, 3)).is_zero());
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) CHECK(nijenhuis_torsion(ex::n2(), diag2(a, b)).is_zero());

  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const LieBracket pi(sampling::random_cochain(rng, 2, n, n));
    const Mat op = sampling::random_matrix(rng, n, n);
    CHECK(nijenhuis_torsion_direct(pi, op) == nijenhuis_torsion_nr(pi, op));

    const auto pair = sampling::random_pair(rng, n);
    const Rational k1 = sampling::small_int(rng), k2 = sampling::small_int(rng);
    CHECK(nijenhuis_torsion(pencil(pair, k1, k2), op) ==
          k1 * nijenhuis_torsion(pair.first(), op) + k2 * nijenhuis_torsion(pair.second(), op));
  }
  CHECK_THROWS_AS(nijenhuis_torsion(sl2, Mat(Mat::Identity(2, 2))), std::invalid_argument);
}

TEST_CASE("Nijenhuis operators and trivial deformations") {
  const auto sl2 = ex::sl2_pair();
  CHECK(is_nijenhuis(sl2, Mat::Identity(3, 3)).ok);
  CHECK(is_nijenhuis(sl2, Mat::Zero(3, 3)).ok);
  CHECK(is_nijenhuis(ex::n2_pair(), diag2(2, -1)).ok);

  const auto id = trivial_deformation_from_nijenhuis(sl2, Mat::Identity(3, 3));
  CHECK(id.omega1 == sl2.first().cochain());
  CHECK(id.omega2 == sl2.second().cochain());
  const auto zero = trivial_deformation_from_nijenhuis(sl2, Mat::Zero(3, 3));
  CHECK(zero.omega1.is_zero());
  CHECK(zero.omega2.is_zero());

  const auto n2 = ex::n2_pair();
  const auto d = trivial_deformation_from_nijenhuis(n2, diag2(1, 0));
  CHECK(d.omega1.eval({0, 1}) == unit_vec(2, 1));
  CHECK(d.omega2.is_zero());

  // diag(a1,a2,a3) on sl2: T(e2,e3) = (a1-a2)(a3-a1) e1.
  const Mat e = Vec((Vec(3) << 1, 2, 3).finished()).asDiagonal();
  const Verdict v = is_nijenhuis(sl2, e);
  REQUIRE_FALSE(v.ok);
  CHECK(v.witness->basis == std::vector<int>{1, 2});
  CHECK(v.witness->value == Vec(Rational(-2) * unit_vec(3, 0)));
  CHECK_THROWS_AS(trivial_deformation_from_nijenhuis(sl2, e), ValidationError);

  const auto seed = ex::nijenhuis_seed_pair();
  const Mat op = ex::nijenhuis_seed();
  REQUIRE(is_nijenhuis(seed, op).ok);
  const Mat sq = op * op;
  // N^2 is not a combination of Id and N.
  Mat span(9, 3);
  span.col(0) = Eigen::Map<const Vec>(Mat(Mat::Identity(3, 3)).data(), 9);
  span.col(1) = Eigen::Map<const Vec>(op.data(), 9);
  span.col(2) = Eigen::Map<const Vec>(sq.data(), 9);
  CHECK(rank(span) == 3);

  for (const Mat& m : {op, sq, Mat(op + Rational(2) * sq), Mat(Rational(1, 2) * Mat(Mat::Identity(3, 3)) - sq * op)}) {
    REQUIRE(is_nijenhuis(seed, m).ok);
    const auto dm = trivial_deformation_from_nijenhuis(seed, m);
    CHECK(is_infinitesimal_deformation(seed, dm).ok);
    const auto d1 = staircase_coboundary(seed, adjoint_rep(seed), {1, {Cochain::linear(m)}});
    CHECK(d1.components[0] == dm.omega1);
    CHECK(d1.components[1] == dm.omega2);
    for (int t : kProbeTs) CHECK_NOTHROW(deformed_pair(seed, dm, t));
    const auto shifted = nijenhuis_deformed_pair(seed, m);
    CHECK(is_homomorphism(m, shifted, seed).ok);
  }
}

TEST_CASE("equivalent deformations") {
  const auto sl2 = ex::sl2_pair();
  const DeformationDatum same{sl2.first().cochain(), sl2.second().cochain()};
  CHECK(deformations_equivalent(sl2, same, same, Mat::Zero(3, 3)).ok);

  const auto n2 = ex::n2_pair();
  const Mat op = diag2(1, 0);
  const auto d = trivial_deformation_from_nijenhuis(n2, op);
  const DeformationDatum none{Cochain(2, 2, 2), Cochain(2, 2, 2)};
  CHECK(deformations_equivalent(n2, d, none, op).ok);
  const auto s1 = coboundary_matrix(n2, adjoint_rep(n2), 1);
  CHECK(in_span(column_space(s1.matrix), flatten(d)).member);
  const auto lin = linear_equivalence_part(n2, d, none);
  REQUIRE(lin);
  CHECK(s1.matrix * Vec(Eigen::Map<const Vec>(lin->data(), 4)) == flatten(d));

  // Id + tN really is a homomorphism between the two deformations at probe t.
  for (int t : kProbeTs) {
    const Mat phi = Mat::Identity(2, 2) + Rational(t) * op;
    CHECK(is_homomorphism(phi, deformed_pair(n2, d, t), deformed_pair(n2, none, t)).ok);
  }

  // Wrong N: the first equation already fails.
  const Verdict bad = deformations_equivalent(n2, d, none, diag2(0, 1));
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.witness->condition == "exact1");

  // Different H^2 classes: no linear solution.
  const auto ab = ex::abelian_pair(2);
  const DeformationDatum w{ex::bracket(2, {{0, 1, 0, 1}}).cochain(), Cochain(2, 2, 2)};
  CHECK_FALSE(linear_equivalence_part(ab, w, {Cochain(2, 2, 2), Cochain(2, 2, 2)}).has_value());
}
