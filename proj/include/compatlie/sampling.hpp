#pragma once

// Seeded generators of small random test data: cochains, compatible pairs
// and representations.  Everything returned by random_pair / random_rep has
// already passed the validators.

#include "compatlie/extension.hpp"

#include <random>

namespace compatlie::sampling {

using Rng = std::mt19937;

Rational small_int(Rng& rng, int lo = -2, int hi = 2);
Mat random_matrix(Rng& rng, int rows, int cols, int lo = -2, int hi = 2);
Vec random_vector(Rng& rng, int size, int lo = -2, int hi = 2);
/// Permutation times unit lower times unit upper triangular.
Mat random_invertible(Rng& rng, int n);
Cochain random_cochain(Rng& rng, int arity, int source_dim, int target_dim);

/// Block-diagonal sum of two brackets on g1 + g2.
LieBracket direct_sum(const LieBracket& a, const LieBracket& b);

/// Compatible pair of the given dimension (1..4):
///   dim 2: any two brackets;
///   dim 3: [x,y] = A(x cross y) for two symmetric A;
///   dim 4: direct sums of smaller pairs, then a random change of basis.
CompatiblePair random_pair(Rng& rng, int dim);

/// A validated representation of module dimension 1..max_module_dim: zero,
/// adjoint or coadjoint (when small enough), scalar-type actions through
/// linear forms vanishing on both derived algebras, direct sums, and
/// conjugates of these.
RepPair random_rep(Rng& rng, const CompatiblePair& pair, int max_module_dim);

RepPair coadjoint_rep(const CompatiblePair& pair);
RepPair direct_sum(const RepPair& a, const RepPair& b);
RepPair conjugate(const RepPair& rep, const Mat& t, const Mat& t_inverse);

/// A valid extension datum with dim g = g_dim, dim h = h_dim (each 1..3):
/// for abelian h a random representation with a random 2-cocycle, otherwise
/// the product with a random h, gauge transformed by a random xi.
ExtensionDatum random_extension(Rng& rng, int g_dim, int h_dim);

/// Adds a random small change to one of rho, mu, omega1, omega2.  The result
/// may or may not be valid.
ExtensionDatum perturb(Rng& rng, ExtensionDatum d);

}  // namespace compatlie::sampling
