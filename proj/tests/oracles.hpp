#pragma once

// Brute-force reference implementations used only by the tests.  They work
// from the raw coefficient tables and full permutation sums, sharing no code
// with the library beyond the storage layout of Cochain.

#include "compatlie/multilinear.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using compatlie::Cochain;
using compatlie::Mat;
using compatlie::Rational;
using compatlie::Vec;

inline int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

inline long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Column lookup built by nested loops, independent of subset_rank.
inline std::map<std::vector<int>, long> column_table(int n, int k) {
  std::map<std::vector<int>, long> table;
  std::vector<int> cur;
  long next = 0;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      table[cur] = next++;
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return table;
}

inline Vec eval(const Cochain& c, std::vector<int> args) {
  const int k = static_cast<int>(args.size());
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return args[static_cast<std::size_t>(a)] < args[static_cast<std::size_t>(b)]; });
  std::vector<int> sorted;
  for (int o : order) sorted.push_back(args[static_cast<std::size_t>(o)]);
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return Vec::Zero(c.target_dim());
  const auto table = column_table(c.source_dim(), k);
  Vec v = c.coeffs().col(table.at(sorted));
  return perm_sign(order) > 0 ? v : Vec(-v);
}

// P(w, e_rest...) with w a vector, by linearity in the first slot.
inline Vec eval_first_vector(const Cochain& p, const Vec& w, const std::vector<int>& rest) {
  Vec out = Vec::Zero(p.target_dim());
  for (int k = 0; k < w.size(); ++k) {
    if (w(k) == 0) continue;
    std::vector<int> args{k};
    args.insert(args.end(), rest.begin(), rest.end());
    out += w(k) * eval(p, args);
  }
  return out;
}

// P o Q via a sum over all permutations divided by the stabiliser order.
inline Cochain compose(const Cochain& p, const Cochain& q) {
  const int n = p.source_dim();
  const int ap = p.arity();
  const int aq = q.arity();
  if (ap == 0) return Cochain(aq - 1, n, n);
  const int total = ap + aq - 1;
  Cochain out(total, n, n);
  const auto table = column_table(n, total);
  const Rational norm(1, factorial(aq) * factorial(ap - 1));
  for (const auto& [subset, col] : table) {
    std::vector<int> perm(static_cast<std::size_t>(total));
    std::iota(perm.begin(), perm.end(), 0);
    Vec acc = Vec::Zero(n);
    do {
      std::vector<int> inner, rest;
      for (int t = 0; t < aq; ++t) inner.push_back(subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])]);
      for (int t = aq; t < total; ++t) rest.push_back(subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])]);
      const Vec w = eval(q, inner);
      const Vec term = eval_first_vector(p, w, rest);
      if (perm_sign(perm) > 0) acc += term; else acc -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.coeffs().col(col) = norm * acc;
  }
  return out;
}

inline Cochain bracket(const Cochain& p, const Cochain& q) {
  const int s = (p.arity() - 1) * (q.arity() - 1);
  Cochain pq = compose(p, q);
  Cochain qp = compose(q, p);
  return s % 2 ? pq + qp : pq - qp;
}

// Exact rank by elimination on nested vectors, full search for pivots.
inline long rank(const Mat& m) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m.rows()));
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(i)].push_back(m(i, j));
  long r = 0;
  const long rows = m.rows();
  const long cols = m.cols();
  for (long c = cols - 1; c >= 0 && r < rows; --c) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
    for (long i = r + 1; i < rows; ++i) {
      const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (long j = 0; j < cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    ++r;
  }
  return r;
}

// Jacobiator J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y] on basis vectors.
inline Vec jacobiator(const Cochain& pi, int x, int y, int z) {
  auto br = [&](const Vec& u, int b) { return eval_first_vector(pi, u, {b}); };
  return br(eval(pi, {x, y}), z) + br(eval(pi, {y, z}), x) + br(eval(pi, {z, x}), y);
}

}  // namespace oracle
