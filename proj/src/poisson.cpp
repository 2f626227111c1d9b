#include "compatlie/poisson.hpp"

#include <algorithm>
#include <functional>

namespace compatlie {

namespace {

// Exponents of n variables with total degree d, lexicographically decreasing.
void exponents_of_degree(int n, int d, std::vector<Exponent>& out) {
  Exponent a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> fill = [&](int pos, int left) {
    if (pos == n - 1) {
      a[static_cast<std::size_t>(pos)] = left;
      out.push_back(a);
      return;
    }
    for (int k = left; k >= 0; --k) {
      a[static_cast<std::size_t>(pos)] = k;
      fill(pos + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(a);
    return;
  }
  fill(0, d);
}

}  // namespace

PolyBasis::PolyBasis(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n < 0 || max_degree < 0) throw std::invalid_argument("PolyBasis: negative size");
  for (int d = 0; d <= max_degree; ++d) {
    block_start_.push_back(static_cast<Index>(monomials_.size()));
    exponents_of_degree(n, d, monomials_);
  }
  block_start_.push_back(static_cast<Index>(monomials_.size()));
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = static_cast<Index>(i);
}

Index PolyBasis::index_of(const Exponent& a) const {
  const auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

std::pair<Index, Index> PolyBasis::degree_block(int d) const {
  if (d < 0 || d > max_degree_) throw std::out_of_range("PolyBasis::degree_block");
  const auto i = static_cast<std::size_t>(d);
  return {block_start_[i], block_start_[i + 1] - block_start_[i]};
}

Vec PolyBasis::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != size() || b.size() != size()) throw std::invalid_argument("PolyBasis::multiply: size mismatch");
  Vec out = Vec::Zero(size());
  for (Index i = 0; i < size(); ++i) {
    if (a(i) == 0) continue;
    for (Index j = 0; j < size(); ++j) {
      if (b(j) == 0) continue;
      Exponent c = monomial(i);
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += monomial(j)[k];
      if (const Index at = index_of(c); at >= 0) out(at) += a(i) * b(j);
    }
  }
  return out;
}

RepPair PolyRep::block(int d) const {
  const auto [start, count] = basis.degree_block(d);
  RepPair out{static_cast<int>(count), {}, {}};
  for (const auto& r : rep.rho) out.rho.push_back(r.block(start, start, count, count));
  for (const auto& r : rep.mu) out.mu.push_back(r.block(start, start, count, count));
  return out;
}

PolyRep lie_poisson_rep(const CompatiblePair& pair, int max_degree) {
  const int n = pair.dim();
  PolyBasis basis(n, max_degree);
  const Index size = basis.size();
  auto derivations = [&](const LieBracket& b) {
    std::vector<Mat> out;
    for (int x = 0; x < n; ++x) {
      Mat m = Mat::Zero(size, size);
      for (Index col = 0; col < size; ++col) {
        const Exponent& a = basis.monomial(col);
        for (int j = 0; j < n; ++j) {
          const int aj = a[static_cast<std::size_t>(j)];
          if (aj == 0) continue;
          const Vec image = b(x, j);  // l_{[x, e_j]} = sum_k c^k xi_k
          for (int k = 0; k < n; ++k) {
            if (image(k) == 0) continue;
            Exponent c = a;
            --c[static_cast<std::size_t>(j)];
            ++c[static_cast<std::size_t>(k)];
            m(basis.index_of(c), col) += Rational(aj) * image(k);
          }
        }
      }
      out.push_back(std::move(m));
    }
    return out;
  };
  RepPair rep{static_cast<int>(size), derivations(pair.first()), derivations(pair.second())};
  return {std::move(basis), std::move(rep)};
}

std::vector<std::vector<Index>> reduced_bihamiltonian_dims(const CompatiblePair& pair, int max_degree,
                                                           int max_cochain_degree) {
  const PolyRep poly = lie_poisson_rep(pair, max_degree);
  std::vector<std::vector<Index>> table;
  for (int d = 0; d <= max_degree; ++d) {
    const RepPair block = poly.block(d);
    std::vector<Index> row;
    for (int k = 0; k <= max_cochain_degree; ++k) row.push_back(reduced_cohomology_dim(pair, block, k));
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace compatlie
