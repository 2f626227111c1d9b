#pragma once

// Extensions 0 -> h -> g + h -> g -> 0 of compatible Lie algebras.
//
// On E = g + h (basis: g first, then h) the data (rho, mu, omega1, omega2)
// give the brackets
//   [(x,u),(y,v)] = ([x,y], rho(x)v - rho(y)u + omega1(x,y) + [u,v]_h)
//   {(x,u),(y,v)} = ({x,y}, mu(x)v  - mu(y)u  + omega2(x,y) + {u,v}_h)
// The abelian case is h with both brackets zero.

#include "compatlie/cohomology.hpp"

#include <optional>
#include <string>

namespace compatlie {

struct ExtensionDatum {
  CompatiblePair g;
  CompatiblePair h;
  std::vector<Mat> rho;  // dim g matrices, each dim h x dim h
  std::vector<Mat> mu;
  Cochain omega1;  // arity 2, g -> h
  Cochain omega2;

  int g_dim() const { return g.dim(); }
  int h_dim() const { return h.dim(); }
  RepPair rep() const { return {h.dim(), rho, mu}; }
};

/// Zero action and zero cocycles: the product g + h.
ExtensionDatum product_datum(const CompatiblePair& g, const CompatiblePair& h);

/// Throws invalid_argument when the shapes do not fit together.
void check_shape(const ExtensionDatum& d);

/// The nine equations making E a compatible Lie algebra (g and h being ones
/// already).  Condition names are "1".."9"; basis tuples list g indices
/// first, then h indices.
///   1  rho([x,y]) = [rho x, rho y] - ad_{omega1(x,y)}
///   2  mu({x,y})  = [mu x, mu y] - ad'_{omega2(x,y)}          (ad' for {,}_h)
///   3  rho(x) is a derivation of [,]_h
///   4  mu(x) is a derivation of {,}_h
///   5  rho({x,y}) + mu([x,y]) = [rho x, mu y] + [mu x, rho y]
///                                - ad_{omega2(x,y)} - ad'_{omega1(x,y)}
///   6  rho(x){u,v} + mu(x)[u,v] = {rho(x)u,v} + {u,rho(x)v} + [mu(x)u,v] + [u,mu(x)v]
///   7  cyclic cocycle identity for (rho, omega1, [,]_g)
///   8  cyclic cocycle identity for (mu, omega2, {,}_g)
///   9  the mixed cyclic identity for (rho, omega2, {,}_g) + (mu, omega1, [,]_g)
/// Witness values are flattened matrices for 1, 2, 5 and vectors otherwise.
Verdict check_extension_equations(const ExtensionDatum& d);

/// The two brackets on g + h, not validated.
std::pair<LieBracket, LieBracket> assemble_extension_brackets(const ExtensionDatum& d);

/// Throws ValidationError carrying the failed equation.
CompatiblePair build_extension(const ExtensionDatum& d);

// ---------------------------------------------------------------------------
// Maurer-Cartan description.  L_k is the space of (k+1)-cochains on g + h with
// values in h that vanish on arguments taken entirely from h; the
// differentials are d_i = [pi_i^ + theta_i^, -]_NR.

struct ExtensionLifts {
  int split = 0;  // dim g
  Cochain pi1, pi2;          // brackets of g, lifted
  Cochain theta1, theta2;    // brackets of h, lifted
  Cochain rho, mu;           // actions, lifted
  Cochain omega1, omega2;    // cocycles, lifted
};

ExtensionLifts lifts(const ExtensionDatum& d);

/// Conditions "mc1": d_1 P1 + 1/2 [P1,P1], "mc2": d_2 P2 + 1/2 [P2,P2],
/// "mc12": d_1 P2 + d_2 P1 + [P1,P2], for P1 = rho^ + omega1^,
/// P2 = mu^ + omega2^.  Basis tuples index g + h.
Verdict mc_check(const ExtensionDatum& d);

/// True when c has values in h and vanishes on pure-h arguments.
bool in_twisted_subalgebra(const Cochain& c, int split);

/// A basis of L in flattened cochain coordinates (arity = degree + 1).
SubspaceBasis twisted_basis(int g_dim, int h_dim, int arity);

/// Matrix of d_i : L (arity) -> L (arity + 1) w.r.t. twisted_basis on both
/// sides.  Throws logic_error if d_i leaves L.
Mat twisted_differential(const ExtensionDatum& d, int which, int arity);

// ---------------------------------------------------------------------------
// Sections and the abelian classification.

/// ext lives on E; embed: h -> E, proj: E -> g, sigma: g -> E.  Throws
/// invalid_argument when proj sigma != Id, proj embed != 0 or the shapes are
/// wrong, and ValidationError (conditions "ideal1", "ideal2") when the image
/// of embed is not an ideal.  Verifies that (x,u) |-> sigma(x) + embed(u) is
/// an isomorphism from the rebuilt extension onto ext (logic_error if not).
ExtensionDatum extract_datum(const CompatiblePair& ext, const Mat& embed, const Mat& proj, const Mat& sigma);

struct CohomologousResult {
  Verdict verdict;        // condition "class" on failure
  std::optional<Mat> phi;  // delta^1 phi = (w1 - w1', w2 - w2')
};

/// Both pairs must be 2-cocycles for (pair, rep); throws invalid_argument otherwise.
CohomologousResult cocycles_cohomologous(const CompatiblePair& pair, const RepPair& rep,
                                         const std::pair<Cochain, Cochain>& w,
                                         const std::pair<Cochain, Cochain>& w_prime);

// ---------------------------------------------------------------------------
// Gauge action of xi : g -> h.

/// P' = P + [X, P] - d X - 1/2 [X, d X] on the lifted data, X the lift of
/// -xi (so that the result agrees with gauge_transform_direct).  Throws
/// ValidationError when d is not a valid datum.
ExtensionDatum gauge_transform(const ExtensionDatum& d, const Mat& xi);

/// The exponential series e^{ad X} P - ((e^{ad X} - 1)/ad X) d X cut after
/// four terms.  Used to confirm that the closed form is not a truncation.
ExtensionDatum gauge_transform_series(const ExtensionDatum& d, const Mat& xi);

/// rho' = rho + ad_{xi x}, omega1' = omega1 + rho(x)xi(y) - rho(y)xi(x)
/// - xi[x,y] + [xi x, xi y]_h, and likewise for mu, omega2.
ExtensionDatum gauge_transform_direct(const ExtensionDatum& d, const Mat& xi);

/// Conditions "iso1".."iso4" (the four relations between d and d_prime).
/// When they hold, theta(x,u) = (x, -xi(x) + u) is checked to be an
/// isomorphism of the built extensions; logic_error if not.
Verdict extensions_isomorphic_under(const ExtensionDatum& d, const ExtensionDatum& d_prime, const Mat& xi);

/// Matrix of theta(x,u) = (x, -xi(x) + u) on g + h.
Mat gauge_isomorphism(const Mat& xi);

}  // namespace compatlie
