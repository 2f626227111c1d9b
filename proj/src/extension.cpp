#include "compatlie/extension.hpp"

#include "compatlie/deformation.hpp"

#include <algorithm>

namespace compatlie {

namespace {

Vec flat(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

Mat combine(const std::vector<Mat>& mats, const Vec& x, Index rows) {
  Mat out = Mat::Zero(rows, rows);
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) out += x(i) * mats[static_cast<std::size_t>(i)];
  return out;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

std::optional<Witness> first_nonzero(const Cochain& c, const std::string& condition) {
  const auto all = subsets(c.source_dim(), c.arity());
  for (std::size_t col = 0; col < all.size(); ++col) {
    const auto v = c.coeffs().col(static_cast<Index>(col));
    if (!is_zero(v)) return Witness{condition, all[col], v};
  }
  return std::nullopt;
}

// Everything needed to evaluate the nine equations on basis vectors.
struct Tables {
  int n, m;
  const ExtensionDatum& d;
  std::vector<Mat> ad1, ad2;  // adjoint matrices of the two brackets of h

  explicit Tables(const ExtensionDatum& datum)
      : n(datum.g_dim()), m(datum.h_dim()), d(datum),
        ad1(adjoint_matrices(datum.h.first().cochain())), ad2(adjoint_matrices(datum.h.second().cochain())) {}

  Mat rho(const Vec& x) const { return combine(d.rho, x, m); }
  Mat mu(const Vec& x) const { return combine(d.mu, x, m); }
  Mat had1(const Vec& u) const { return combine(ad1, u, m); }
  Mat had2(const Vec& u) const { return combine(ad2, u, m); }
  const Mat& rho(int x) const { return d.rho[static_cast<std::size_t>(x)]; }
  const Mat& mu(int x) const { return d.mu[static_cast<std::size_t>(x)]; }
  Vec g1(int x, int y) const { return d.g.first()(x, y); }
  Vec g2(int x, int y) const { return d.g.second()(x, y); }
  Vec w1(int x, int y) const { return d.omega1.eval({x, y}); }
  Vec w2(int x, int y) const { return d.omega2.eval({x, y}); }
  Vec w1(const Vec& a, int y) const { return d.omega1.apply({a, unit_vec(n, y)}); }
  Vec w2(const Vec& a, int y) const { return d.omega2.apply({a, unit_vec(n, y)}); }
  Vec h1(const Vec& u, const Vec& v) const { return d.h.first()(u, v); }
  Vec h2(const Vec& u, const Vec& v) const { return d.h.second()(u, v); }
};

// Cyclic identity sum_cyc [ A(x) w(y,z) - w(B(x,y), z) ] for one choice of
// action A, cocycle w and bracket B of g.
template <typename Act, typename W, typename B>
Vec cyclic(const Act& act, const W& w, const B& b, int x, int y, int z) {
  const int t[3] = {x, y, z};
  Vec out;
  for (int c = 0; c < 3; ++c) {
    const int a = t[c], p = t[(c + 1) % 3], q = t[(c + 2) % 3];
    Vec term = act(a) * w(p, q) - w(b(a, p), q);
    out = c == 0 ? term : Vec(out + term);
  }
  return out;
}

Cochain lifted(const MixedMap& m) { return lift(m).map; }

Cochain lift_h_bracket(const LieBracket& b, int n) {
  const int m = b.dim();
  MixedMap mm(0, 2, n, m, Side::Second);
  for (const auto& uv : subsets(m, 2)) mm.set(std::span<const int>(), uv, b(uv[0], uv[1]));
  return lifted(mm);
}

// The gauge element for xi.  With our NR signs, P + [X,P] - dX - 1/2[X,dX]
// realizes rho' = rho + ad_{xi(x)} for X = lift(-xi), not lift(xi).
Cochain gauge_element(const Mat& xi, int m) {
  return lifted(MixedMap::from_cochain(Cochain::linear(Mat(-xi)), m, Side::Second));
}

// Reads (rho, omega) back from a lifted P = rho^ + omega^; logic_error if P
// has any other component.
std::pair<std::vector<Mat>, Cochain> read_off(const Cochain& p, int n, int m) {
  const MixedMap act = component(p, n, 1, 1, Side::Second);
  const MixedMap w = component(p, n, 2, 0, Side::Second);
  std::vector<Mat> rho;
  for (int x = 0; x < n; ++x) {
    Mat r(m, m);
    for (int v = 0; v < m; ++v) {
      const int xs[] = {x};
      const int vs[] = {v};
      r.col(v) = act.at(xs, vs);
    }
    rho.push_back(std::move(r));
  }
  Cochain omega(2, n, Mat(w.coeffs()));
  if (!(lifted(act) + lifted(w) == p)) throw std::logic_error("gauge transform left the (rho, omega) shape");
  return {std::move(rho), std::move(omega)};
}

Mat identity(int n) { return Mat::Identity(n, n); }

void require_valid(const ExtensionDatum& d) {
  Verdict v = check_extension_equations(d);
  if (!v) throw ValidationError("extension datum fails equation " + v.witness->condition, std::move(v));
}

// Flattened positions of the coordinates spanning L in arity-p cochains on g + h.
std::vector<Index> twisted_positions(int n, int m, int arity) {
  const int total = n + m;
  std::vector<Index> out;
  const auto all = subsets(total, arity);
  for (std::size_t col = 0; col < all.size(); ++col) {
    if (!all[col].empty() && all[col].front() >= n) continue;
    for (int r = 0; r < m; ++r) out.push_back(static_cast<Index>(col) * total + n + r);
  }
  return out;
}

}  // namespace

ExtensionDatum product_datum(const CompatiblePair& g, const CompatiblePair& h) {
  const int n = g.dim(), m = h.dim();
  return {g, h, std::vector<Mat>(n, Mat::Zero(m, m)), std::vector<Mat>(n, Mat::Zero(m, m)),
          Cochain(2, n, m), Cochain(2, n, m)};
}

void check_shape(const ExtensionDatum& d) {
  const int n = d.g_dim(), m = d.h_dim();
  check_rep_shape(n, d.rep());
  for (const auto* w : {&d.omega1, &d.omega2})
    if (w->arity() != 2 || w->source_dim() != n || w->target_dim() != m)
      throw std::invalid_argument("extension datum: omega must be an arity-2 map g -> h");
}

Verdict check_extension_equations(const ExtensionDatum& d) {
  check_shape(d);
  const Tables t(d);
  const int n = t.n, m = t.m;
  const auto pairs = subsets(n, 2);
  const auto triples = subsets(n, 3);
  const auto hpairs = subsets(m, 2);

  for (const auto& s : pairs) {
    const int x = s[0], y = s[1];
    const Mat defect = t.rho(t.g1(x, y)) - commutator(t.rho(x), t.rho(y)) + t.had1(t.w1(x, y));
    if (!is_zero(defect)) return Verdict::fail("1", {x, y}, flat(defect));
  }
  for (const auto& s : pairs) {
    const int x = s[0], y = s[1];
    const Mat defect = t.mu(t.g2(x, y)) - commutator(t.mu(x), t.mu(y)) + t.had2(t.w2(x, y));
    if (!is_zero(defect)) return Verdict::fail("2", {x, y}, flat(defect));
  }
  auto derivation = [&](const char* id, auto act, auto br) -> Verdict {
    for (int x = 0; x < n; ++x)
      for (const auto& uv : hpairs) {
        const Vec u = unit_vec(m, uv[0]), v = unit_vec(m, uv[1]);
        const Mat& a = act(x);
        const Vec defect = a * br(u, v) - br(a * u, v) - br(u, a * v);
        if (!is_zero(defect)) return Verdict::fail(id, {x, uv[0], uv[1]}, defect);
      }
    return Verdict::pass();
  };
  auto h1 = [&](const Vec& u, const Vec& v) { return t.h1(u, v); };
  auto h2 = [&](const Vec& u, const Vec& v) { return t.h2(u, v); };
  auto rho = [&](int x) -> const Mat& { return t.rho(x); };
  auto mu = [&](int x) -> const Mat& { return t.mu(x); };
  if (Verdict v = derivation("3", rho, h1); !v) return v;
  if (Verdict v = derivation("4", mu, h2); !v) return v;

  for (const auto& s : pairs) {
    const int x = s[0], y = s[1];
    const Mat defect = t.rho(t.g2(x, y)) + t.mu(t.g1(x, y)) - commutator(t.rho(x), t.mu(y)) -
                       commutator(t.mu(x), t.rho(y)) + t.had1(t.w2(x, y)) + t.had2(t.w1(x, y));
    if (!is_zero(defect)) return Verdict::fail("5", {x, y}, flat(defect));
  }
  for (int x = 0; x < n; ++x)
    for (const auto& uv : hpairs) {
      const Vec u = unit_vec(m, uv[0]), v = unit_vec(m, uv[1]);
      const Mat& r = t.rho(x);
      const Mat& q = t.mu(x);
      const Vec defect = r * t.h2(u, v) + q * t.h1(u, v) - t.h2(r * u, v) - t.h2(u, r * v) - t.h1(q * u, v) -
                         t.h1(u, q * v);
      if (!is_zero(defect)) return Verdict::fail("6", {x, uv[0], uv[1]}, defect);
    }

  auto w1 = [&](auto a, int q) { return t.w1(a, q); };
  auto w2 = [&](auto a, int q) { return t.w2(a, q); };
  auto g1 = [&](int a, int b) { return t.g1(a, b); };
  auto g2 = [&](int a, int b) { return t.g2(a, b); };
  for (const auto& s : triples) {
    const Vec defect = cyclic(rho, w1, g1, s[0], s[1], s[2]);
    if (!is_zero(defect)) return Verdict::fail("7", s, defect);
  }
  for (const auto& s : triples) {
    const Vec defect = cyclic(mu, w2, g2, s[0], s[1], s[2]);
    if (!is_zero(defect)) return Verdict::fail("8", s, defect);
  }
  for (const auto& s : triples) {
    const Vec defect = cyclic(rho, w2, g1, s[0], s[1], s[2]) + cyclic(mu, w1, g2, s[0], s[1], s[2]);
    if (!is_zero(defect)) return Verdict::fail("9", s, defect);
  }
  return Verdict::pass();
}

std::pair<LieBracket, LieBracket> assemble_extension_brackets(const ExtensionDatum& d) {
  check_shape(d);
  const int n = d.g_dim(), m = d.h_dim(), total = n + m;
  auto assemble = [&](const LieBracket& g, const LieBracket& h, const std::vector<Mat>& act, const Cochain& w) {
    Cochain c(2, total, total);
    for (const auto& s : subsets(total, 2)) {
      const int a = s[0], b = s[1];
      Vec value = Vec::Zero(total);
      if (b < n) {
        value.head(n) = g(a, b);
        value.tail(m) = w.eval({a, b});
      } else if (a < n) {
        value.tail(m) = act[static_cast<std::size_t>(a)].col(b - n);
      } else {
        value.tail(m) = h(a - n, b - n);
      }
      c.set(s, value);
    }
    return LieBracket(std::move(c));
  };
  return {assemble(d.g.first(), d.h.first(), d.rho, d.omega1),
          assemble(d.g.second(), d.h.second(), d.mu, d.omega2)};
}

CompatiblePair build_extension(const ExtensionDatum& d) {
  require_valid(d);
  auto [first, second] = assemble_extension_brackets(d);
  return CompatiblePair(std::move(first), std::move(second));
}

ExtensionLifts lifts(const ExtensionDatum& d) {
  check_shape(d);
  const int n = d.g_dim(), m = d.h_dim();
  return {n,
          lifted(MixedMap::from_cochain(d.g.first().cochain(), m, Side::First)),
          lifted(MixedMap::from_cochain(d.g.second().cochain(), m, Side::First)),
          lift_h_bracket(d.h.first(), n),
          lift_h_bracket(d.h.second(), n),
          lifted(MixedMap::from_action(d.rho, n, m)),
          lifted(MixedMap::from_action(d.mu, n, m)),
          lifted(MixedMap::from_cochain(d.omega1, m, Side::Second)),
          lifted(MixedMap::from_cochain(d.omega2, m, Side::Second))};
}

Verdict mc_check(const ExtensionDatum& d) {
  const ExtensionLifts l = lifts(d);
  const Cochain d1 = l.pi1 + l.theta1;
  const Cochain d2 = l.pi2 + l.theta2;
  const Cochain p1 = l.rho + l.omega1;
  const Cochain p2 = l.mu + l.omega2;
  const Rational half(1, 2);
  const std::pair<const char*, Cochain> conditions[] = {
      {"mc1", nr_bracket(d1, p1) + half * nr_bracket(p1, p1)},
      {"mc2", nr_bracket(d2, p2) + half * nr_bracket(p2, p2)},
      {"mc12", nr_bracket(d1, p2) + nr_bracket(d2, p1) + nr_bracket(p1, p2)},
  };
  for (const auto& [name, c] : conditions)
    if (auto w = first_nonzero(c, name)) return {false, std::move(w)};
  return Verdict::pass();
}

bool in_twisted_subalgebra(const Cochain& c, int split) {
  if (c.target_dim() != c.source_dim()) return false;
  if (!is_zero(c.coeffs().topRows(split))) return false;
  const auto all = subsets(c.source_dim(), c.arity());
  for (std::size_t col = 0; col < all.size(); ++col)
    if (!all[col].empty() && all[col].front() >= split && !is_zero(c.coeffs().col(static_cast<Index>(col))))
      return false;
  return true;
}

SubspaceBasis twisted_basis(int g_dim, int h_dim, int arity) {
  const int total = g_dim + h_dim;
  SubspaceBasis b{binomial(total, arity) * total, {}};
  for (Index pos : twisted_positions(g_dim, h_dim, arity)) b.vectors.push_back(unit_vec(b.ambient_dim, pos));
  return b;
}

Mat twisted_differential(const ExtensionDatum& d, int which, int arity) {
  if (which != 1 && which != 2) throw std::invalid_argument("twisted_differential: which must be 1 or 2");
  const ExtensionLifts l = lifts(d);
  const Cochain base = which == 1 ? l.pi1 + l.theta1 : l.pi2 + l.theta2;
  const int n = d.g_dim(), m = d.h_dim(), total = n + m;
  const auto in = twisted_positions(n, m, arity);
  const auto out = twisted_positions(n, m, arity + 1);
  Mat matrix(static_cast<Index>(out.size()), static_cast<Index>(in.size()));
  for (std::size_t j = 0; j < in.size(); ++j) {
    Cochain c(arity, total, total);
    c.coeffs()(in[j] % total, in[j] / total) = 1;
    const Cochain image = nr_bracket(base, c);
    if (!in_twisted_subalgebra(image, n)) throw std::logic_error("twisted_differential: image leaves the subalgebra");
    const Vec f = image.flatten();
    for (std::size_t i = 0; i < out.size(); ++i) matrix(static_cast<Index>(i), static_cast<Index>(j)) = f(out[i]);
  }
  return matrix;
}

ExtensionDatum extract_datum(const CompatiblePair& ext, const Mat& embed, const Mat& proj, const Mat& sigma) {
  const int total = ext.dim();
  const int m = static_cast<int>(embed.cols());
  const int n = static_cast<int>(proj.rows());
  if (embed.rows() != total || proj.cols() != total || sigma.rows() != total || sigma.cols() != n || n + m != total)
    throw std::invalid_argument("extract_datum: dimension mismatch");
  if (!(proj * sigma == identity(n))) throw std::invalid_argument("extract_datum: proj o sigma is not the identity");
  if (!is_zero(proj * embed)) throw std::invalid_argument("extract_datum: proj o embed is not zero");
  Mat frame(total, total);
  frame << sigma, embed;
  const auto frame_inv = inverse(frame);
  if (!frame_inv) throw std::invalid_argument("extract_datum: embed is not injective");
  auto to_h = [&](const Vec& w) -> Vec { return (*frame_inv * w).tail(m); };

  const std::pair<const char*, const LieBracket*> brackets[] = {{"ideal1", &ext.first()}, {"ideal2", &ext.second()}};
  for (const auto& [name, b] : brackets)
    for (int a = 0; a < total; ++a)
      for (int u = 0; u < m; ++u) {
        const Vec leak = proj * (*b)(unit_vec(total, a), Vec(embed.col(u)));
        if (!is_zero(leak)) {
          Verdict v = Verdict::fail(name, {a, u}, leak);
          throw ValidationError(std::string("extract_datum: kernel is not an ideal (") + name + ")", std::move(v));
        }
      }

  auto quotient = [&](const LieBracket& b) {
    LieBracket out(n);
    for (const auto& s : subsets(n, 2)) out.cochain().set(s, proj * b(Vec(sigma.col(s[0])), Vec(sigma.col(s[1]))));
    return out;
  };
  auto restrict = [&](const LieBracket& b) {
    LieBracket out(m);
    for (const auto& s : subsets(m, 2)) out.cochain().set(s, to_h(b(Vec(embed.col(s[0])), Vec(embed.col(s[1])))));
    return out;
  };
  auto action = [&](const LieBracket& b) {
    std::vector<Mat> out;
    for (int x = 0; x < n; ++x) {
      Mat r(m, m);
      for (int u = 0; u < m; ++u) r.col(u) = to_h(b(Vec(sigma.col(x)), Vec(embed.col(u))));
      out.push_back(std::move(r));
    }
    return out;
  };
  auto cocycle = [&](const LieBracket& b, const LieBracket& quot) {
    Cochain w(2, n, m);
    for (const auto& s : subsets(n, 2))
      w.set(s, to_h(b(Vec(sigma.col(s[0])), Vec(sigma.col(s[1]))) - sigma * quot(s[0], s[1])));
    return w;
  };
  const LieBracket q1 = quotient(ext.first()), q2 = quotient(ext.second());
  ExtensionDatum out{CompatiblePair(q1, q2),
                     CompatiblePair(restrict(ext.first()), restrict(ext.second())),
                     action(ext.first()),
                     action(ext.second()),
                     cocycle(ext.first(), q1),
                     cocycle(ext.second(), q2)};
  if (!is_homomorphism(frame, build_extension(out), ext))
    throw std::logic_error("extract_datum: rebuilt extension is not isomorphic to the input");
  return out;
}

CohomologousResult cocycles_cohomologous(const CompatiblePair& pair, const RepPair& rep,
                                         const std::pair<Cochain, Cochain>& w,
                                         const std::pair<Cochain, Cochain>& w_prime) {
  check_rep_shape(pair.dim(), rep);
  for (const auto* c : {&w, &w_prime}) {
    const auto image = staircase_coboundary(pair, rep, {2, {c->first, c->second}});
    for (const auto& comp : image.components)
      if (!comp.is_zero()) throw std::invalid_argument("cocycles_cohomologous: input is not a 2-cocycle");
  }
  const Vec diff = flatten(CochainTuple{2, {w.first - w_prime.first, w.second - w_prime.second}});
  const ComplexSlice s1 = coboundary_matrix(pair, rep, 1);
  const auto x = solve(s1.matrix, diff);
  if (!x) return {Verdict::fail("class", {}, diff), std::nullopt};
  return {Verdict::pass(), Mat(Eigen::Map<const Mat>(x->data(), rep.module_dim, pair.dim()))};
}

Mat gauge_isomorphism(const Mat& xi) {
  const int m = static_cast<int>(xi.rows()), n = static_cast<int>(xi.cols());
  Mat theta = identity(n + m);
  theta.bottomLeftCorner(m, n) = -xi;
  return theta;
}

namespace {

void check_xi(const ExtensionDatum& d, const Mat& xi) {
  if (xi.rows() != d.h_dim() || xi.cols() != d.g_dim()) throw std::invalid_argument("xi must be a dim h x dim g matrix");
}

ExtensionDatum with_lifts(const ExtensionDatum& d, const Cochain& p1, const Cochain& p2) {
  auto [rho, w1] = read_off(p1, d.g_dim(), d.h_dim());
  auto [mu, w2] = read_off(p2, d.g_dim(), d.h_dim());
  return {d.g, d.h, std::move(rho), std::move(mu), std::move(w1), std::move(w2)};
}

}  // namespace

ExtensionDatum gauge_transform(const ExtensionDatum& d, const Mat& xi) {
  require_valid(d);
  check_xi(d, xi);
  const ExtensionLifts l = lifts(d);
  const Cochain x = gauge_element(xi, d.h_dim());
  const Rational half(1, 2);
  auto step = [&](const Cochain& base, const Cochain& act, const Cochain& w) {
    const Cochain dx = nr_bracket(base, x);
    return act + w + nr_bracket(x, act) - dx - half * nr_bracket(x, dx);
  };
  return with_lifts(d, step(l.pi1 + l.theta1, l.rho, l.omega1), step(l.pi2 + l.theta2, l.mu, l.omega2));
}

ExtensionDatum gauge_transform_series(const ExtensionDatum& d, const Mat& xi) {
  require_valid(d);
  check_xi(d, xi);
  const ExtensionLifts l = lifts(d);
  const Cochain x = gauge_element(xi, d.h_dim());
  constexpr int kTerms = 4;
  auto step = [&](const Cochain& base, const Cochain& p) {
    Cochain out = p;
    Cochain ad_p = p;
    Cochain ad_dx = nr_bracket(base, x);
    Rational fact(1);
    out -= ad_dx;
    for (int k = 1; k < kTerms; ++k) {
      ad_p = nr_bracket(x, ad_p);
      ad_dx = nr_bracket(x, ad_dx);
      fact *= k;
      out += (Rational(1) / fact) * ad_p;
      out -= (Rational(1) / (fact * (k + 1))) * ad_dx;
    }
    return out;
  };
  return with_lifts(d, step(l.pi1 + l.theta1, l.rho + l.omega1), step(l.pi2 + l.theta2, l.mu + l.omega2));
}

ExtensionDatum gauge_transform_direct(const ExtensionDatum& d, const Mat& xi) {
  check_shape(d);
  check_xi(d, xi);
  const Tables t(d);
  const int n = t.n, m = t.m;
  ExtensionDatum out = d;
  for (int x = 0; x < n; ++x) {
    out.rho[static_cast<std::size_t>(x)] += t.had1(xi.col(x));
    out.mu[static_cast<std::size_t>(x)] += t.had2(xi.col(x));
  }
  for (const auto& s : subsets(n, 2)) {
    const int x = s[0], y = s[1];
    const Vec a = xi.col(x), b = xi.col(y);
    out.omega1.set(s, t.w1(x, y) + t.rho(x) * b - t.rho(y) * a - xi * t.g1(x, y) + t.h1(a, b));
    out.omega2.set(s, t.w2(x, y) + t.mu(x) * b - t.mu(y) * a - xi * t.g2(x, y) + t.h2(a, b));
  }
  (void)m;
  return out;
}

Verdict extensions_isomorphic_under(const ExtensionDatum& d, const ExtensionDatum& d_prime, const Mat& xi) {
  check_shape(d);
  check_shape(d_prime);
  check_xi(d, xi);
  if (d_prime.g_dim() != d.g_dim() || d_prime.h_dim() != d.h_dim())
    throw std::invalid_argument("extensions_isomorphic_under: dimension mismatch");
  const ExtensionDatum expected = gauge_transform_direct(d, xi);
  const int n = d.g_dim();
  const std::pair<const char*, const std::vector<Mat>*> acts[] = {{"iso1", &d_prime.rho}, {"iso2", &d_prime.mu}};
  const std::vector<Mat>* expected_acts[] = {&expected.rho, &expected.mu};
  for (int s = 0; s < 2; ++s)
    for (int x = 0; x < n; ++x) {
      const Mat defect = (*acts[s].second)[static_cast<std::size_t>(x)] - (*expected_acts[s])[static_cast<std::size_t>(x)];
      if (!is_zero(defect)) return Verdict::fail(acts[s].first, {x}, flat(defect));
    }
  if (auto w = first_nonzero(d_prime.omega1 - expected.omega1, "iso3")) return {false, std::move(w)};
  if (auto w = first_nonzero(d_prime.omega2 - expected.omega2, "iso4")) return {false, std::move(w)};
  if (!is_homomorphism(gauge_isomorphism(xi), build_extension(d), build_extension(d_prime)))
    throw std::logic_error("extensions_isomorphic_under: theta is not an isomorphism");
  return Verdict::pass();
}

}  // namespace compatlie
