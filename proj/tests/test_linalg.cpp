#include <doctest.h>

#include "compatlie/linalg.hpp"
#include "oracles.hpp"

#include <random>

using namespace compatlie;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  Mat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vec vec(std::initializer_list<long> vals) {
  Vec v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (long x : vals) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("+7/1") == Rational(7));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_WITH_AS(parse_rational("1/0"), "zero denominator", std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_rational("1.5"), "malformed rational", std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("10/-5"), std::invalid_argument);
}

TEST_CASE("rank") {
  CHECK(rank(Mat(Mat::Identity(2, 2))) == 2);
  CHECK(rank(Mat(Mat::Zero(3, 3))) == 0);
  const Mat m = from_rows({{1, 2}, {2, 4}, {3, 6}});
  CHECK(rank(m) == 1);
  CHECK(rank_fraction_free(m) == 1);
  CHECK(oracle::rank(m) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Mat(Mat::Identity(2, 2))).empty());

  const auto k1 = kernel_basis(from_rows({{1, -1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1.vectors[0] == vec({1, 1}));

  const auto k2 = kernel_basis(from_rows({{1, 2}, {2, 4}}));
  REQUIRE(k2.size() == 1);
  const Vec& v = k2.vectors[0];
  CHECK(v(0) * Rational(-1) == v(1) * Rational(2));
  CHECK(!is_zero(v));
}

TEST_CASE("in_span") {
  SubspaceBasis b{2, {vec({1, 0})}};
  auto r = in_span(b, vec({3, 0}));
  CHECK(r.member);
  CHECK(r.coefficients(0) == 3);
  CHECK_FALSE(in_span(b, vec({0, 1})).member);

  SubspaceBasis b3{3, {vec({1, 1, 0}), vec({0, 1, 1})}};
  auto r3 = in_span(b3, vec({1, 2, 1}));
  REQUIRE(r3.member);
  CHECK(r3.coefficients == vec({1, 1}));

  CHECK_THROWS_AS(in_span(b, vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("solve and extend_basis") {
  const Mat m = from_rows({{1, 1}, {1, -1}});
  auto x = solve(m, vec({3, 1}));
  REQUIRE(x);
  CHECK(*x == vec({2, 1}));
  CHECK_FALSE(solve(from_rows({{1, 1}, {2, 2}}), vec({1, 3})).has_value());

  SubspaceBasis base{3, {vec({1, 0, 0})}};
  const auto added = extend_basis(base, {vec({2, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0}), vec({0, 0, 5})});
  REQUIRE(added.size() == 2);
  CHECK(added[0] == vec({0, 1, 0}));
  CHECK(added[1] == vec({0, 0, 5}));
}

TEST_CASE("random matrices: rank-nullity, transpose, certificates") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = size(gen), c = size(gen);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = entry(gen);
    if (trial % 3 == 0 && r > 1) m.row(r - 1) = m.row(0) * Rational(2, 3);

    const Index rk = rank(m);
    const auto ker = kernel_basis(m);
    CHECK(rk + ker.size() == c);
    for (const auto& v : ker.vectors) CHECK(is_zero(m * v));
    CHECK(rank(Mat(m.transpose())) == rk);
    CHECK(oracle::rank(m) == rk);
    CHECK(rank_fraction_free(m) == rk);

    const auto cs = column_space(m);
    Vec target = Vec::Zero(r);
    for (int j = 0; j < c; ++j) target += Rational(j + 1) * m.col(j);
    const auto mem = in_span(cs, target);
    REQUIRE(mem.member);
    CHECK(cs.matrix() * mem.coefficients == target);
  }
}
