#pragma once

// The staircase complex of a compatible pair with coefficients in a
// representation, and the reduced complex.
//
// Degree n >= 1 holds n copies of C^n(g,V); degree 0 is the subspace
// {v : rho(x)v = mu(x)v for all x} of V.  Coordinates of a tuple: component
// index slowest, then the lexicographic subset, then the module index.
//
//   delta^0 v = d1 v
//   delta^n (w_1..w_n) = (d1 w_1, d2 w_1 + d1 w_2, ..., d2 w_{n-1} + d1 w_n, d2 w_n)
//
// with d1, d2 the Chevalley-Eilenberg coboundaries of (pi1, rho), (pi2, mu).

#include "compatlie/compat.hpp"
#include "compatlie/linalg.hpp"

#include <vector>

namespace compatlie {

struct CochainTuple {
  int degree = 0;
  std::vector<Cochain> components;  // one arity-0 element when degree == 0
};

/// Matrix of the Chevalley-Eilenberg coboundary C^n(g,V) -> C^{n+1}(g,V) in
/// flattened coordinates.
Mat ce_matrix(const LieBracket& pi, const std::vector<Mat>& rho, int n);

SubspaceBasis c0_basis(const CompatiblePair& pair, const RepPair& rep);

/// Dimension of the degree-n cochain space (n >= 1), n * C(dim g, n) * dim V.
Index tuple_dim(int algebra_dim, int module_dim, int n);

Vec flatten(const CochainTuple& t);
CochainTuple unflatten_tuple(int degree, int algebra_dim, int module_dim, const Vec& flat);

/// Throws invalid_argument on a malformed tuple, or when a degree-0 element
/// lies outside c0.
CochainTuple staircase_coboundary(const CompatiblePair& pair, const RepPair& rep, const CochainTuple& t);

/// The adjoint complex written with NR brackets,
/// (-1)^{n-1} ([pi1,w_1], ..., [pi2,w_{i-1}] + [pi1,w_i], ..., [pi2,w_n]),
/// and x |-> -[pi1, x] in degree 0.  Computed without Chevalley-Eilenberg sums.
CochainTuple adjoint_coboundary_nr(const CompatiblePair& pair, const CochainTuple& t);

struct ComplexSlice {
  int degree = 0;
  SubspaceBasis basis;  // the domain, inside its ambient coordinates
  Mat matrix;           // ambient(degree+1) x basis.size()
};

ComplexSlice coboundary_matrix(const CompatiblePair& pair, const RepPair& rep, int n);

struct CohomologyResult {
  Index dim = 0;
  SubspaceBasis representatives;  // in ambient degree-n coordinates
  Index kernel_dim = 0;
  Index image_dim = 0;
};

CohomologyResult cohomology(const CompatiblePair& pair, const RepPair& rep, int n);
inline Index cohomology_dim(const CompatiblePair& pair, const RepPair& rep, int n) {
  return cohomology(pair, rep, n).dim;
}

struct DerivationSpaces {
  SubspaceBasis der;   // flattened matrices (column-major)
  SubspaceBasis ider;
};

DerivationSpaces derivation_spaces(const CompatiblePair& pair);

/// C~^n = ker d1 on C^n(g,V), and d2 restricted to it.  The matrix maps
/// coordinates w.r.t. basis into ambient C^{n+1}(g,V).  Throws logic_error
/// if d2 fails to preserve the kernels.
ComplexSlice reduced_slice(const CompatiblePair& pair, const RepPair& rep, int n);

CohomologyResult reduced_cohomology(const CompatiblePair& pair, const RepPair& rep, int n);
inline Index reduced_cohomology_dim(const CompatiblePair& pair, const RepPair& rep, int n) {
  return reduced_cohomology(pair, rep, n).dim;
}

}  // namespace compatlie
