#include "compatlie/deformation.hpp"

namespace compatlie {

namespace {

std::optional<Witness> first_nonzero(const Cochain& c, const std::string& condition) {
  const auto all = subsets(c.source_dim(), c.arity());
  for (std::size_t col = 0; col < all.size(); ++col) {
    const auto v = c.coeffs().col(static_cast<Index>(col));
    if (!is_zero(v)) return Witness{condition, all[col], v};
  }
  return std::nullopt;
}

void check_datum(const CompatiblePair& pair, const DeformationDatum& d) {
  const int n = pair.dim();
  for (const auto* c : {&d.omega1, &d.omega2})
    if (c->arity() != 2 || c->source_dim() != n || c->target_dim() != n)
      throw std::invalid_argument("deformation datum: cochains must be arity-2 maps g -> g");
}

void check_operator(int n, const Mat& m) {
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("operator: dimension mismatch");
}

// b(N x, N y) as a cochain.
Cochain pull_back(const Cochain& b, const Mat& n) {
  Cochain out(2, b.source_dim(), b.target_dim());
  for (const auto& s : subsets(b.source_dim(), 2)) out.set(s, b.apply({n.col(s[0]), n.col(s[1])}));
  return out;
}

// b(N x, y) + b(x, N y).
Cochain one_sided(const Cochain& b, const Mat& n) {
  Cochain out(2, b.source_dim(), b.target_dim());
  for (const auto& s : subsets(b.source_dim(), 2)) {
    const Vec x = unit_vec(b.source_dim(), s[0]);
    const Vec y = unit_vec(b.source_dim(), s[1]);
    out.set(s, b.apply({n.col(s[0]), y}) + b.apply({x, n.col(s[1])}));
  }
  return out;
}

Cochain after(const Mat& n, const Cochain& c) { return Cochain(c.arity(), c.source_dim(), Mat(n * c.coeffs())); }

}  // namespace

Vec flatten(const DeformationDatum& d) { return flatten(CochainTuple{2, {d.omega1, d.omega2}}); }

Verdict is_infinitesimal_deformation(const CompatiblePair& pair, const DeformationDatum& d) {
  check_datum(pair, d);
  const Cochain& p1 = pair.first().cochain();
  const Cochain& p2 = pair.second().cochain();
  const Cochain& w1 = d.omega1;
  const Cochain& w2 = d.omega2;
  const std::pair<const char*, Cochain> conditions[] = {
      {"[pi1,w1]", nr_bracket(p1, w1)},
      {"[pi1,w2]+[pi2,w1]", nr_bracket(p1, w2) + nr_bracket(p2, w1)},
      {"[pi2,w2]", nr_bracket(p2, w2)},
      {"[w1,w1]", nr_bracket(w1, w1)},
      {"[w1,w2]", nr_bracket(w1, w2)},
      {"[w2,w2]", nr_bracket(w2, w2)},
  };
  for (const auto& [name, c] : conditions)
    if (auto w = first_nonzero(c, name)) return {false, std::move(w)};

  const auto closed = staircase_coboundary(pair, adjoint_rep(pair), {2, {w1, w2}});
  for (const auto& c : closed.components)
    if (!c.is_zero()) throw std::logic_error("deformation datum passed the NR test but is not a 2-cocycle");
  if (!validate_pair(LieBracket(w1), LieBracket(w2)))
    throw std::logic_error("deformation datum passed the NR test but (w1, w2) is not compatible");
  return Verdict::pass();
}

CompatiblePair deformed_pair(const CompatiblePair& pair, const DeformationDatum& d, const Rational& t) {
  Verdict v = is_infinitesimal_deformation(pair, d);
  if (!v) throw ValidationError("not an infinitesimal deformation (" + v.witness->condition + ")", std::move(v));
  return CompatiblePair(LieBracket(pair.first().cochain() + t * d.omega1),
                        LieBracket(pair.second().cochain() + t * d.omega2));
}

Verdict check_probes(const CompatiblePair& pair, const DeformationDatum& d) {
  check_datum(pair, d);
  for (int t : kProbeTs) {
    Verdict v = validate_pair(LieBracket(pair.first().cochain() + Rational(t) * d.omega1),
                              LieBracket(pair.second().cochain() + Rational(t) * d.omega2));
    if (!v) {
      v.witness->condition = "t=" + std::to_string(t) + ": " + v.witness->condition;
      return v;
    }
  }
  return Verdict::pass();
}

Cochain nijenhuis_torsion_direct(const LieBracket& pi, const Mat& n) {
  check_operator(pi.dim(), n);
  const Cochain& b = pi.cochain();
  const Cochain deformed = one_sided(b, n) - after(n, b);
  return after(n, deformed) - pull_back(b, n);
}

Cochain nijenhuis_torsion_nr(const LieBracket& pi, const Mat& n) {
  check_operator(pi.dim(), n);
  const Cochain op = Cochain::linear(n);
  const Cochain sq = nr_compose(op, op);
  return Rational(1, 2) * (nr_bracket(pi.cochain(), sq) + nr_bracket(op, nr_bracket(pi.cochain(), op)));
}

Cochain nijenhuis_torsion(const LieBracket& pi, const Mat& n) {
  Cochain direct = nijenhuis_torsion_direct(pi, n);
  if (!(direct == nijenhuis_torsion_nr(pi, n))) throw std::logic_error("nijenhuis_torsion: the two formulas disagree");
  return direct;
}

Verdict is_nijenhuis(const CompatiblePair& pair, const Mat& n) {
  if (auto w = first_nonzero(nijenhuis_torsion(pair.first(), n), "torsion1")) return {false, std::move(w)};
  if (auto w = first_nonzero(nijenhuis_torsion(pair.second(), n), "torsion2")) return {false, std::move(w)};
  return Verdict::pass();
}

DeformationDatum trivial_deformation_from_nijenhuis(const CompatiblePair& pair, const Mat& n) {
  Verdict v = is_nijenhuis(pair, n);
  if (!v) throw ValidationError("not a Nijenhuis operator (" + v.witness->condition + ")", std::move(v));
  const Cochain op = Cochain::linear(n);
  return {nr_bracket(pair.first().cochain(), op), nr_bracket(pair.second().cochain(), op)};
}

CompatiblePair nijenhuis_deformed_pair(const CompatiblePair& pair, const Mat& n) {
  const DeformationDatum d = trivial_deformation_from_nijenhuis(pair, n);
  return CompatiblePair(LieBracket(d.omega1), LieBracket(d.omega2));
}

Verdict is_homomorphism(const Mat& f, const CompatiblePair& from, const CompatiblePair& to) {
  if (f.rows() != to.dim() || f.cols() != from.dim()) throw std::invalid_argument("is_homomorphism: dimension mismatch");
  const std::pair<const char*, const LieBracket*> sides[] = {{"hom1", &from.first()}, {"hom2", &from.second()}};
  const LieBracket* targets[] = {&to.first(), &to.second()};
  for (int s = 0; s < 2; ++s) {
    const LieBracket& src = *sides[s].second;
    const LieBracket& dst = *targets[s];
    for (const auto& ij : subsets(from.dim(), 2)) {
      const Vec defect = f * src(ij[0], ij[1]) - dst(Vec(f.col(ij[0])), Vec(f.col(ij[1])));
      if (!is_zero(defect)) return Verdict::fail(sides[s].first, ij, defect);
    }
  }
  return Verdict::pass();
}

Verdict deformations_equivalent(const CompatiblePair& pair, const DeformationDatum& d,
                                const DeformationDatum& d_prime, const Mat& n) {
  check_datum(pair, d);
  check_datum(pair, d_prime);
  check_operator(pair.dim(), n);
  const Cochain& p1 = pair.first().cochain();
  const Cochain& p2 = pair.second().cochain();
  const std::pair<const char*, Cochain> equations[] = {
      {"exact1", d.omega1 - d_prime.omega1 - (one_sided(p1, n) - after(n, p1))},
      {"integral1", after(n, d.omega1) - one_sided(d_prime.omega1, n) - pull_back(p1, n)},
      {"exact2", d.omega2 - d_prime.omega2 - (one_sided(p2, n) - after(n, p2))},
      {"integral2", after(n, d.omega2) - one_sided(d_prime.omega2, n) - pull_back(p2, n)},
      {"kernel1", pull_back(d_prime.omega1, n)},
      {"kernel2", pull_back(d_prime.omega2, n)},
  };
  for (const auto& [name, c] : equations)
    if (auto w = first_nonzero(c, name)) return {false, std::move(w)};

  const auto dn = staircase_coboundary(pair, adjoint_rep(pair), {1, {Cochain::linear(n)}});
  if (!(dn.components[0] == d.omega1 - d_prime.omega1) || !(dn.components[1] == d.omega2 - d_prime.omega2))
    throw std::logic_error("deformations_equivalent: difference is not delta^1 N");
  return Verdict::pass();
}

std::optional<Mat> linear_equivalence_part(const CompatiblePair& pair, const DeformationDatum& d,
                                           const DeformationDatum& d_prime) {
  check_datum(pair, d);
  check_datum(pair, d_prime);
  const ComplexSlice s1 = coboundary_matrix(pair, adjoint_rep(pair), 1);
  const Vec diff = flatten(d) - flatten(d_prime);
  auto x = solve(s1.matrix, diff);
  if (!x) return std::nullopt;
  const int n = pair.dim();
  return Mat(Eigen::Map<const Mat>(x->data(), n, n));
}

}  // namespace compatlie
