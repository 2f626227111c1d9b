#pragma once

// Exact scalar type and the dense Eigen containers built on it.
//
// Everything in this library works over the rationals.  The algebraic
// constructions (brackets, coboundaries, ranks) are all defined over any
// field of characteristic zero, and every operation we need is rational
// linear, so Q is enough and keeps the arithmetic exact.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace compatlie {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatX<Rational>;
using Vec = VecX<Rational>;

/// Parses an optional sign, digits and an optional "/digits" suffix.
/// Throws std::invalid_argument("malformed rational") or
/// std::invalid_argument("zero denominator").
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

inline Mat zero_mat(Eigen::Index rows, Eigen::Index cols) { return Mat::Zero(rows, cols); }
inline Vec zero_vec(Eigen::Index size) { return Vec::Zero(size); }
inline Vec unit_vec(Eigen::Index size, Eigen::Index i) {
  Vec v = Vec::Zero(size);
  v(i) = 1;
  return v;
}

}  // namespace compatlie
