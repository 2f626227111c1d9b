#pragma once

// Alternating multilinear maps, the Nijenhuis-Richardson bracket, lifts to
// direct sums and the Chevalley-Eilenberg coboundary.
//
// Basis vectors are 0-based indices.  A p-cochain stores one column per
// increasing p-subset of the source basis, subsets in lexicographic order,
// so coeffs() is target_dim x C(source_dim, p).  Column-major flattening of
// that table (subset outer, target index inner) is the coordinate order used
// by every coboundary matrix in the library.

#include "compatlie/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace compatlie {

using Eigen::Index;

std::int64_t binomial(int n, int k);

/// All increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

/// Position of an increasing subset in the lexicographic order of subsets().
Index subset_rank(int n, std::span<const int> increasing);

struct Unshuffle {
  std::vector<int> perm;  // perm[t] = sigma(t+1) - 1
  int sign = 1;
};

/// All (i, n-i)-unshuffles: sigma(1)<...<sigma(i), sigma(i+1)<...<sigma(n).
/// Generated by choosing the first block, so the list has C(n, i) entries.
std::vector<Unshuffle> unshuffles(int i, int n);

class Cochain {
 public:
  Cochain() = default;
  Cochain(int arity, int source_dim, int target_dim);
  Cochain(int arity, int source_dim, Mat coeffs);

  static Cochain identity(int dim);
  /// Arity-1 cochain with the given matrix (columns are images of basis vectors).
  static Cochain linear(const Mat& m);
  /// Arity-0 cochain, i.e. an element of the target space.
  static Cochain element(const Vec& v, int source_dim);
  static Cochain unflatten(int arity, int source_dim, int target_dim, const Vec& flat);

  int arity() const { return arity_; }
  int source_dim() const { return source_dim_; }
  int target_dim() const { return target_dim_; }
  Index num_subsets() const { return coeffs_.cols(); }
  Index flat_size() const { return coeffs_.size(); }

  const Mat& coeffs() const { return coeffs_; }
  Mat& coeffs() { return coeffs_; }

  /// Value on basis vectors e_{args[0]}, ..., in any order; alternating
  /// extension of the stored table, zero when an index repeats.
  Vec eval(std::span<const int> args) const;
  Vec eval(std::initializer_list<int> args) const { return eval(std::span<const int>(args.begin(), args.size())); }

  /// Value on arbitrary vectors by multilinear expansion.
  Vec apply(const std::vector<Vec>& args) const;

  /// Sets the value on an increasing index list.
  void set(std::span<const int> increasing, const Vec& value);
  void set(std::initializer_list<int> increasing, const Vec& value) {
    set(std::span<const int>(increasing.begin(), increasing.size()), value);
  }

  /// The matrix of an arity-1 cochain.
  const Mat& as_matrix() const;

  Vec flatten() const;
  bool is_zero() const { return compatlie::is_zero(coeffs_); }

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Rational& s);

  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator-(Cochain a) { return a *= Rational(-1); }
  friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  void check_same_shape(const Cochain& other) const;

  int arity_ = 0;
  int source_dim_ = 0;
  int target_dim_ = 0;
  Mat coeffs_;
};

/// Sorts basis indices; returns the subset rank and the permutation sign,
/// or nullopt when an index repeats.
std::optional<std::pair<Index, int>> sorted_rank(int n, std::vector<int>& args);

/// P o Q for endomorphism-valued P, Q on the same space.
Cochain nr_compose(const Cochain& p, const Cochain& q);

/// [P,Q] = P o Q - (-1)^{pq} Q o P, with p = arity(P)-1, q = arity(Q)-1.
Cochain nr_bracket(const Cochain& p, const Cochain& q);

/// c'(x_1..x_p) = T c(T^{-1} x_1, ..., T^{-1} x_p) for an endomorphism-valued c.
Cochain transform(const Cochain& c, const Mat& t, const Mat& t_inverse);

// ---------------------------------------------------------------------------
// Direct sums g1 + g2: basis indices 0..n1-1 are g1, n1..n1+n2-1 are g2.

enum class Side { First, Second };

struct Bidegree {
  int k = 0;
  int l = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// f : wedge^k g1 (x) wedge^l g2 -> g1 or g2.  Column index is
/// rank(first-block subset) * C(n2, l) + rank(second-block subset).
class MixedMap {
 public:
  MixedMap(int k, int l, int n1, int n2, Side side);

  int k() const { return k_; }
  int l() const { return l_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  Side side() const { return side_; }
  int target_dim() const { return side_ == Side::First ? n1_ : n2_; }

  const Mat& coeffs() const { return coeffs_; }
  Mat& coeffs() { return coeffs_; }

  /// Both index lists increasing, relative to their own block.
  Index column(std::span<const int> xs, std::span<const int> vs) const;
  Vec at(std::span<const int> xs, std::span<const int> vs) const { return coeffs_.col(column(xs, vs)); }
  void set(std::span<const int> xs, std::span<const int> vs, const Vec& value);

  /// Wraps an ordinary cochain wedge^k g1 -> g2 (l = 0, side Second) or
  /// wedge^k g1 -> g1 (side First).
  static MixedMap from_cochain(const Cochain& f, int n2, Side side);
  /// beta(x, v) = rho(x) v for rho given as matrices rho[i] of e_i.
  static MixedMap from_action(const std::vector<Mat>& rho, int n1, int n2);

 private:
  int k_, l_, n1_, n2_;
  Side side_;
  Mat coeffs_;
};

struct LiftedCochain {
  Cochain map;  // on g1 + g2, arity k + l
  int split = 0;
  std::optional<Bidegree> tag;
};

LiftedCochain lift(const MixedMap& f);

/// Restriction of F to g^{k,l} followed by projection to one side.
MixedMap component(const Cochain& f, int split, int k, int l, Side side);

enum class Homogeneity { Homogeneous, ZeroMap, NotHomogeneous };

struct BidegreeResult {
  Homogeneity kind = Homogeneity::NotHomogeneous;
  Bidegree bidegree;  // meaningful only for Homogeneous
};

/// Decides the bidegree from where F is nonzero.  The zero map is reported
/// separately since it has every bidegree.
BidegreeResult bidegree_of(const Cochain& f, int split);
inline BidegreeResult bidegree_of(const LiftedCochain& f) { return bidegree_of(f.map, f.split); }

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg coboundary of f : wedge^n g -> V for a bracket on g and
// an action rho (rho[i] = matrix of rho(e_i) on V).

/// Explicit double sum.
Cochain ce_coboundary(const Cochain& bracket, const std::vector<Mat>& rho, const Cochain& f);

/// (-1)^{n-1} [pi^ + rho^, f^]_NR on g + V, projected back to wedge^{n+1} g -> V.
Cochain ce_coboundary_nr(const Cochain& bracket, const std::vector<Mat>& rho, const Cochain& f);

/// Adjoint action matrices of a bracket: column j of ad[i] is [e_i, e_j].
std::vector<Mat> adjoint_matrices(const Cochain& bracket);

}  // namespace compatlie
