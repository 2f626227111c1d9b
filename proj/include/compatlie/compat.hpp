#pragma once

// Lie brackets, compatible pairs and their representations.
//
// Matrix convention: rho[i] is the matrix of rho(e_i); its j-th column is
// rho(e_i) applied to the j-th module basis vector.

#include "compatlie/multilinear.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace compatlie {

/// Where a check failed: a condition name, the lexicographically first
/// failing basis tuple (0-based) and the nonzero defect there.
struct Witness {
  std::string condition;
  std::vector<int> basis;
  Vec value;
};

struct Verdict {
  bool ok = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string condition, std::vector<int> basis, Vec value) {
    return {false, Witness{std::move(condition), std::move(basis), std::move(value)}};
  }
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, Verdict verdict)
      : std::runtime_error(what), verdict_(std::move(verdict)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// An antisymmetric bilinear bracket, stored as an arity-2 cochain g -> g.
/// Jacobi is not implied; see validate_bracket.
class LieBracket {
 public:
  LieBracket() = default;
  explicit LieBracket(int dim) : c_(2, dim, dim) {}
  explicit LieBracket(Cochain c);

  int dim() const { return c_.source_dim(); }
  const Cochain& cochain() const { return c_; }
  Cochain& cochain() { return c_; }

  Vec operator()(int i, int j) const { return c_.eval({i, j}); }
  Vec operator()(const Vec& x, const Vec& y) const { return c_.apply({x, y}); }

  /// Adds coeff * e_k to [e_i, e_j] (any order of i, j).
  void add(int i, int j, int k, const Rational& coeff);

  friend bool operator==(const LieBracket& a, const LieBracket& b) { return a.c_ == b.c_; }

 private:
  Cochain c_;
};

class CompatiblePair {
 public:
  /// Validates both brackets and the mixed condition; throws ValidationError.
  CompatiblePair(LieBracket first, LieBracket second);
  static CompatiblePair unchecked(LieBracket first, LieBracket second);

  int dim() const { return first_.dim(); }
  const LieBracket& first() const { return first_; }
  const LieBracket& second() const { return second_; }

 private:
  struct Unchecked {};
  CompatiblePair(LieBracket first, LieBracket second, Unchecked);

  LieBracket first_;
  LieBracket second_;
};

struct RepPair {
  int module_dim = 0;
  std::vector<Mat> rho;
  std::vector<Mat> mu;

  static RepPair zero(int algebra_dim, int module_dim);
};

/// [pi, pi]_NR = 0, witness value the Jacobiator (pi o pi) on a basis triple.
Verdict validate_bracket(const LieBracket& pi);

/// Conditions "pi1", "pi2" and "mixed" (the three NR identities), in that order.
Verdict validate_pair(const LieBracket& pi1, const LieBracket& pi2);

LieBracket pencil(const CompatiblePair& pair, const Rational& k1, const Rational& k2);

/// Conditions "rho" (rep of pi1), "mu" (rep of pi2) and "mixed",
/// rho({x,y}) + mu([x,y]) = [rho x, mu y] - [rho y, mu x].  Witness values
/// are defect matrices flattened column-major.
Verdict validate_rep(const CompatiblePair& pair, const RepPair& rep);

RepPair adjoint_rep(const CompatiblePair& pair);

/// Checks the dimensions of a RepPair against an algebra; throws invalid_argument.
void check_rep_shape(int algebra_dim, const RepPair& rep);

}  // namespace compatlie
