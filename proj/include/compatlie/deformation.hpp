#pragma once

// Infinitesimal deformations [x,y]_t = [x,y] + t w1(x,y), {x,y}_t = {x,y} + t w2(x,y),
// Nijenhuis operators and trivial deformations.

#include "compatlie/cohomology.hpp"

#include <optional>

namespace compatlie {

struct DeformationDatum {
  Cochain omega1;
  Cochain omega2;
};

/// Conditions, in order: "[pi1,w1]", "[pi1,w2]+[pi2,w1]", "[pi2,w2]",
/// "[w1,w1]", "[w1,w2]", "[w2,w2]" (all NR brackets must vanish).  On success
/// also confirms that (w1, w2) is a 2-cocycle and a compatible pair; a
/// failure there is a logic_error.
Verdict is_infinitesimal_deformation(const CompatiblePair& pair, const DeformationDatum& d);

/// The t used to certify identities in t: each condition is a polynomial of
/// degree at most 2, so vanishing at three points is enough.
inline constexpr int kProbeTs[] = {1, 2, 3};

/// (pi1 + t w1, pi2 + t w2).  Throws ValidationError if d is not a
/// deformation.
CompatiblePair deformed_pair(const CompatiblePair& pair, const DeformationDatum& d, const Rational& t);

/// validate_pair on the deformed brackets at every probe t, without the NR test.
Verdict check_probes(const CompatiblePair& pair, const DeformationDatum& d);

/// N[x,y]_N - [Nx,Ny] with [x,y]_N = [Nx,y] + [x,Ny] - N[x,y].
Cochain nijenhuis_torsion_direct(const LieBracket& pi, const Mat& n);
/// (1/2)([pi, N o N] + [N, [pi, N]]) with NR brackets.
Cochain nijenhuis_torsion_nr(const LieBracket& pi, const Mat& n);
/// Both of the above; throws logic_error if they differ.
Cochain nijenhuis_torsion(const LieBracket& pi, const Mat& n);

/// Conditions "torsion1", "torsion2".
Verdict is_nijenhuis(const CompatiblePair& pair, const Mat& n);

/// ([pi1, N], [pi2, N]).  Throws ValidationError if N is not Nijenhuis.
DeformationDatum trivial_deformation_from_nijenhuis(const CompatiblePair& pair, const Mat& n);

/// The deformed pair ([-,-]_N, {-,-}_N); throws ValidationError if it is not compatible.
CompatiblePair nijenhuis_deformed_pair(const CompatiblePair& pair, const Mat& n);

/// f(from(x,y)) = to(f x, f y) for both brackets.  Conditions "hom1", "hom2".
Verdict is_homomorphism(const Mat& f, const CompatiblePair& from, const CompatiblePair& to);

/// Equations, in order:
///   "exact1"     w1 - w1' = [x,Ny] + [Nx,y] - N[x,y]
///   "integral1"  N w1(x,y) = w1'(x,Ny) + w1'(Nx,y) + [Nx,Ny]
///   "exact2"     same as exact1 for the second bracket
///   "integral2"  same as integral1 for the second bracket
///   "kernel1"    w1'(Nx,Ny) = 0
///   "kernel2"    w2'(Nx,Ny) = 0
/// These say that Id + tN maps the deformation of d homomorphically onto that
/// of d_prime.  On success also confirms (w1-w1', w2-w2') = delta^1 N.
Verdict deformations_equivalent(const CompatiblePair& pair, const DeformationDatum& d,
                                const DeformationDatum& d_prime, const Mat& n);

/// Solves the linear part delta^1 N = (w1-w1', w2-w2') only.  nullopt means
/// the classes differ in H^2, so no equivalence exists.
std::optional<Mat> linear_equivalence_part(const CompatiblePair& pair, const DeformationDatum& d,
                                           const DeformationDatum& d_prime);

/// Coordinates of (w1, w2) in the degree-2 adjoint cochain space.
Vec flatten(const DeformationDatum& d);

}  // namespace compatlie
