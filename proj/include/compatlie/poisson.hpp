#pragma once

// The Lie-Poisson representation of a compatible pair on polynomials in the
// linear coordinates xi_1..xi_n of g* (xi_j = l_{e_j}), truncated at degree D.
//
// rho(x) f = {l_x, f}_1 and mu(x) f = {l_x, f}_2 act as derivations with
// xi_j |-> l_{[x, e_j]}, so the degree-1 block of rho(e_i) is exactly the
// adjoint matrix of e_i under xi_j <-> e_j.

#include "compatlie/cohomology.hpp"

#include <map>
#include <vector>

namespace compatlie {

using Exponent = std::vector<int>;

/// Monomials of total degree <= D in graded lexicographic order: by degree,
/// then lexicographically decreasing exponent vectors (xi_1^2, xi_1 xi_2, xi_2^2).
class PolyBasis {
 public:
  PolyBasis(int n, int max_degree);

  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  Index size() const { return static_cast<Index>(monomials_.size()); }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  const Exponent& monomial(Index i) const { return monomials_[static_cast<std::size_t>(i)]; }
  /// -1 when the exponent is not in the basis (too large a degree).
  Index index_of(const Exponent& a) const;

  /// First index and count of the monomials of total degree d.
  std::pair<Index, Index> degree_block(int d) const;

  /// Product truncated at degree D.
  Vec multiply(const Vec& a, const Vec& b) const;

 private:
  int n_;
  int max_degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, Index> index_;
  std::vector<Index> block_start_;
};

struct PolyRep {
  PolyBasis basis;
  RepPair rep;  // module_dim == basis.size()

  /// The restriction to the degree-d monomials.
  RepPair block(int d) const;
};

PolyRep lie_poisson_rep(const CompatiblePair& pair, int max_degree);

/// table[d][k] = reduced cohomology dimension in cochain degree k with
/// coefficients in the degree-d block, for d <= max_degree, k <= max_cochain_degree.
std::vector<std::vector<Index>> reduced_bihamiltonian_dims(const CompatiblePair& pair, int max_degree,
                                                           int max_cochain_degree);

}  // namespace compatlie
