#pragma once

// Exact linear algebra over a field: echelon forms, rank, kernels, spans.
//
// The templates only use field operations and comparison with zero, so they
// work for any exact scalar (Rational in practice).  Never instantiate them
// with floating point types: there is no pivoting strategy and no tolerance.

#include "compatlie/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace compatlie {

using Eigen::Index;

/// A list of linearly independent vectors in a fixed ambient space.
template <typename Scalar>
struct SubspaceBasisT {
  Index ambient_dim = 0;
  std::vector<VecX<Scalar>> vectors;

  Index size() const { return static_cast<Index>(vectors.size()); }
  bool empty() const { return vectors.empty(); }

  /// ambient_dim x size() matrix whose columns are the basis vectors.
  MatX<Scalar> matrix() const {
    MatX<Scalar> m(ambient_dim, size());
    for (Index j = 0; j < size(); ++j) m.col(j) = vectors[static_cast<std::size_t>(j)];
    return m;
  }

  static SubspaceBasisT full(Index dim) {
    SubspaceBasisT b{dim, {}};
    for (Index i = 0; i < dim; ++i) {
      VecX<Scalar> v = VecX<Scalar>::Zero(dim);
      v(i) = 1;
      b.vectors.push_back(std::move(v));
    }
    return b;
  }
};

using SubspaceBasis = SubspaceBasisT<Rational>;

template <typename Scalar>
struct EchelonForm {
  MatX<Scalar> reduced;       // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <typename Derived>
EchelonForm<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatX<Scalar> m = input;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(row_reduce(m).pivots.size());
}

/// Basis of {v : M v = 0}, returned in reduced column echelon form: the
/// vectors are the rows of the reduced row echelon form of their span.
template <typename Derived>
SubspaceBasisT<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_reduce(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VecX<Scalar>> raw;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VecX<Scalar> v = VecX<Scalar>::Zero(n);
    v(f) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      v(ech.pivots[r]) = -ech.reduced(static_cast<Index>(r), f);
    raw.push_back(std::move(v));
  }

  SubspaceBasisT<Scalar> out{n, {}};
  if (raw.empty()) return out;
  MatX<Scalar> stacked(static_cast<Index>(raw.size()), n);
  for (std::size_t i = 0; i < raw.size(); ++i) stacked.row(static_cast<Index>(i)) = raw[i].transpose();
  const auto canon = row_reduce(stacked);
  for (std::size_t i = 0; i < canon.pivots.size(); ++i)
    out.vectors.push_back(canon.reduced.row(static_cast<Index>(i)).transpose());
  return out;
}

/// One solution of M x = b (free variables set to zero), or nullopt.
template <typename DerivedM, typename DerivedB>
std::optional<VecX<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                     const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  if (b.rows() != m.rows() || b.cols() != 1) throw std::invalid_argument("solve: dimension mismatch");
  MatX<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto ech = row_reduce(aug);
  VecX<Scalar> x = VecX<Scalar>::Zero(m.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const Index p = ech.pivots[r];
    if (p == m.cols()) return std::nullopt;  // inconsistent row 0 = 1
    x(p) = ech.reduced(static_cast<Index>(r), m.cols());
  }
  return x;
}

template <typename Scalar>
struct SpanMembership {
  bool member = false;
  VecX<Scalar> coefficients;  // basis.matrix() * coefficients == v when member
};

template <typename Scalar, typename Derived>
SpanMembership<Scalar> in_span(const SubspaceBasisT<Scalar>& basis, const Eigen::MatrixBase<Derived>& v) {
  if (v.rows() != basis.ambient_dim || v.cols() != 1)
    throw std::invalid_argument("in_span: dimension mismatch");
  if (basis.empty()) {
    return {is_zero(v), VecX<Scalar>::Zero(0)};
  }
  auto x = solve(basis.matrix(), v);
  if (!x) return {false, VecX<Scalar>()};
  return {true, std::move(*x)};
}

/// Column space of M as an independent list (the pivot columns of M).
template <typename Derived>
SubspaceBasisT<typename Derived::Scalar> column_space(const Eigen::MatrixBase<Derived>& m) {
  const auto ech = row_reduce(m);
  SubspaceBasisT<typename Derived::Scalar> out{m.rows(), {}};
  for (Index p : ech.pivots) out.vectors.push_back(m.col(p));
  return out;
}

/// Vectors of `candidates` (in order) that extend `base` to a basis of
/// span(base, candidates).  The returned list excludes `base` itself.
template <typename Scalar>
std::vector<VecX<Scalar>> extend_basis(const SubspaceBasisT<Scalar>& base,
                                       const std::vector<VecX<Scalar>>& candidates) {
  std::vector<VecX<Scalar>> current = base.vectors;
  std::vector<VecX<Scalar>> added;
  for (const auto& c : candidates) {
    MatX<Scalar> m(base.ambient_dim, static_cast<Index>(current.size()) + 1);
    for (std::size_t j = 0; j < current.size(); ++j) m.col(static_cast<Index>(j)) = current[j];
    m.col(m.cols() - 1) = c;
    if (rank(m) == m.cols()) {
      current.push_back(c);
      added.push_back(c);
    }
  }
  return added;
}

/// Inverse of a square matrix via Gauss-Jordan on [M | I]; nullopt if singular.
template <typename Derived>
std::optional<MatX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const Index n = m.rows();
  MatX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatX<Scalar>::Identity(n, n);
  const auto ech = row_reduce(aug);
  if (static_cast<Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots.back() >= n)) return std::nullopt;
  return MatX<Scalar>(ech.reduced.rightCols(n));
}

/// Fraction-free (Bareiss) rank over an integral domain with exact division.
template <typename Scalar>
Index bareiss_rank(MatX<Scalar> m) {
  Index r = 0;
  Scalar prev = 1;
  for (Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = r; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Index i = r + 1; i < m.rows(); ++i) {
      for (Index c = col + 1; c < m.cols(); ++c)
        m(i, c) = (m(r, col) * m(i, c) - m(i, col) * m(r, c)) / prev;
      m(i, col) = 0;
    }
    prev = m(r, col);
    ++r;
  }
  return r;
}

/// Rank via Bareiss elimination on the integer matrix obtained by clearing
/// denominators row by row.  Independent of row_reduce; used to
/// cross-validate rank computations.
Index rank_fraction_free(const Mat& m);

}  // namespace compatlie
