#include "compatlie/cohomology.hpp"

namespace compatlie {

namespace {

void check_tuple(const CochainTuple& t, int algebra_dim, int module_dim) {
  const std::size_t expected = t.degree == 0 ? 1 : static_cast<std::size_t>(t.degree);
  if (t.degree < 0 || t.components.size() != expected) throw std::invalid_argument("cochain tuple: wrong number of components");
  for (const auto& c : t.components)
    if (c.arity() != t.degree || c.source_dim() != algebra_dim || c.target_dim() != module_dim)
      throw std::invalid_argument("cochain tuple: component shape mismatch");
}

void require_in_c0(const CompatiblePair& pair, const RepPair& rep, const Vec& v) {
  for (int i = 0; i < pair.dim(); ++i)
    if (rep.rho[static_cast<std::size_t>(i)] * v != rep.mu[static_cast<std::size_t>(i)] * v)
      throw std::invalid_argument("degree-0 element is not in the c0 subspace");
}

}  // namespace

Mat ce_matrix(const LieBracket& pi, const std::vector<Mat>& rho, int n) {
  const int d = pi.dim();
  const int m = rho.empty() ? 0 : static_cast<int>(rho.front().rows());
  const Index cols = static_cast<Index>(binomial(d, n)) * m;
  const Index rows = static_cast<Index>(binomial(d, n + 1)) * m;
  Mat out = Mat::Zero(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    Vec unit = Vec::Zero(cols);
    unit(j) = 1;
    out.col(j) = ce_coboundary(pi.cochain(), rho, Cochain::unflatten(n, d, m, unit)).flatten();
  }
  return out;
}

SubspaceBasis c0_basis(const CompatiblePair& pair, const RepPair& rep) {
  check_rep_shape(pair.dim(), rep);
  const int n = pair.dim();
  const int m = rep.module_dim;
  Mat stacked(static_cast<Index>(n) * m, m);
  for (int i = 0; i < n; ++i)
    stacked.middleRows(static_cast<Index>(i) * m, m) = rep.rho[static_cast<std::size_t>(i)] - rep.mu[static_cast<std::size_t>(i)];
  return kernel_basis(stacked);
}

Index tuple_dim(int algebra_dim, int module_dim, int n) {
  return static_cast<Index>(n) * static_cast<Index>(binomial(algebra_dim, n)) * module_dim;
}

Vec flatten(const CochainTuple& t) {
  Index size = 0;
  for (const auto& c : t.components) size += c.flat_size();
  Vec out(size);
  Index at = 0;
  for (const auto& c : t.components) {
    out.segment(at, c.flat_size()) = c.flatten();
    at += c.flat_size();
  }
  return out;
}

CochainTuple unflatten_tuple(int degree, int algebra_dim, int module_dim, const Vec& flat) {
  CochainTuple t{degree, {}};
  const int copies = degree == 0 ? 1 : degree;
  const Index block = static_cast<Index>(binomial(algebra_dim, degree)) * module_dim;
  if (flat.size() != block * copies) throw std::invalid_argument("unflatten_tuple: size mismatch");
  for (int c = 0; c < copies; ++c)
    t.components.push_back(Cochain::unflatten(degree, algebra_dim, module_dim, flat.segment(c * block, block)));
  return t;
}

CochainTuple staircase_coboundary(const CompatiblePair& pair, const RepPair& rep, const CochainTuple& t) {
  check_rep_shape(pair.dim(), rep);
  check_tuple(t, pair.dim(), rep.module_dim);
  const Cochain& pi1 = pair.first().cochain();
  const Cochain& pi2 = pair.second().cochain();
  if (t.degree == 0) {
    require_in_c0(pair, rep, t.components[0].coeffs().col(0));
    return {1, {ce_coboundary(pi1, rep.rho, t.components[0])}};
  }
  const int n = t.degree;
  CochainTuple out{n + 1, {}};
  for (int i = 0; i <= n; ++i) {
    Cochain c(n + 1, pair.dim(), rep.module_dim);
    if (i > 0) c += ce_coboundary(pi2, rep.mu, t.components[static_cast<std::size_t>(i - 1)]);
    if (i < n) c += ce_coboundary(pi1, rep.rho, t.components[static_cast<std::size_t>(i)]);
    out.components.push_back(std::move(c));
  }
  return out;
}

CochainTuple adjoint_coboundary_nr(const CompatiblePair& pair, const CochainTuple& t) {
  const int d = pair.dim();
  check_tuple(t, d, d);
  const Cochain& pi1 = pair.first().cochain();
  const Cochain& pi2 = pair.second().cochain();
  if (t.degree == 0) {
    const Cochain& x = t.components[0];
    const Cochain b1 = nr_bracket(pi1, x);
    if (!(b1 == nr_bracket(pi2, x))) throw std::invalid_argument("degree-0 element is not in the c0 subspace");
    return {1, {-b1}};
  }
  const int n = t.degree;
  const Rational sign = (n - 1) % 2 == 0 ? Rational(1) : Rational(-1);
  CochainTuple out{n + 1, {}};
  for (int i = 0; i <= n; ++i) {
    Cochain c(n + 1, d, d);
    if (i > 0) c += nr_bracket(pi2, t.components[static_cast<std::size_t>(i - 1)]);
    if (i < n) c += nr_bracket(pi1, t.components[static_cast<std::size_t>(i)]);
    out.components.push_back(sign * c);
  }
  return out;
}

ComplexSlice coboundary_matrix(const CompatiblePair& pair, const RepPair& rep, int n) {
  if (n < 0) throw std::invalid_argument("coboundary_matrix: negative degree");
  check_rep_shape(pair.dim(), rep);
  const int d = pair.dim();
  const int m = rep.module_dim;
  const Mat d1 = ce_matrix(pair.first(), rep.rho, n);
  if (n == 0) {
    SubspaceBasis basis = c0_basis(pair, rep);
    return {0, basis, d1 * basis.matrix()};
  }
  const Mat d2 = ce_matrix(pair.second(), rep.mu, n);
  const Index in_block = d1.cols();
  const Index out_block = d1.rows();
  Mat matrix = Mat::Zero(out_block * (n + 1), in_block * n);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) matrix.block(out_block * i, in_block * (i - 1), out_block, in_block) += d2;
    if (i < n) matrix.block(out_block * i, in_block * i, out_block, in_block) += d1;
  }
  return {n, SubspaceBasis::full(tuple_dim(d, m, n)), std::move(matrix)};
}

namespace {

CohomologyResult cohomology_from(const ComplexSlice& here, const Mat* previous) {
  const auto ker = kernel_basis(here.matrix);
  std::vector<Vec> kernel_ambient;
  const Mat b = here.basis.matrix();
  for (const auto& k : ker.vectors) kernel_ambient.push_back(b * k);
  SubspaceBasis image{here.basis.ambient_dim, {}};
  if (previous) image = column_space(*previous);
  CohomologyResult r;
  r.kernel_dim = ker.size();
  r.image_dim = image.size();
  r.representatives = SubspaceBasis{here.basis.ambient_dim, extend_basis(image, kernel_ambient)};
  r.dim = r.representatives.size();
  return r;
}

}  // namespace

CohomologyResult cohomology(const CompatiblePair& pair, const RepPair& rep, int n) {
  const ComplexSlice here = coboundary_matrix(pair, rep, n);
  if (n == 0) return cohomology_from(here, nullptr);
  const ComplexSlice prev = coboundary_matrix(pair, rep, n - 1);
  return cohomology_from(here, &prev.matrix);
}

DerivationSpaces derivation_spaces(const CompatiblePair& pair) {
  const RepPair ad = adjoint_rep(pair);
  const ComplexSlice s1 = coboundary_matrix(pair, ad, 1);
  const ComplexSlice s0 = coboundary_matrix(pair, ad, 0);
  return {kernel_basis(s1.matrix), column_space(s0.matrix)};
}

ComplexSlice reduced_slice(const CompatiblePair& pair, const RepPair& rep, int n) {
  if (n < 0) throw std::invalid_argument("reduced_slice: negative degree");
  check_rep_shape(pair.dim(), rep);
  const Mat d1 = ce_matrix(pair.first(), rep.rho, n);
  const Mat d2 = ce_matrix(pair.second(), rep.mu, n);
  SubspaceBasis basis = kernel_basis(d1);
  Mat restricted = d2 * basis.matrix();
  const Mat d1_next = ce_matrix(pair.first(), rep.rho, n + 1);
  if (!is_zero(d1_next * restricted)) throw std::logic_error("reduced_slice: d2 does not preserve ker d1");
  return {n, std::move(basis), std::move(restricted)};
}

CohomologyResult reduced_cohomology(const CompatiblePair& pair, const RepPair& rep, int n) {
  const ComplexSlice here = reduced_slice(pair, rep, n);
  if (n == 0) return cohomology_from(here, nullptr);
  const ComplexSlice prev = reduced_slice(pair, rep, n - 1);
  return cohomology_from(here, &prev.matrix);
}

}  // namespace compatlie
