#include "compatlie/compat.hpp"

namespace compatlie {

namespace {

// First nonzero column of an arity-p cochain, as a witness.
std::optional<Witness> first_nonzero(const Cochain& c, const std::string& condition) {
  const auto all = subsets(c.source_dim(), c.arity());
  for (std::size_t col = 0; col < all.size(); ++col) {
    const auto v = c.coeffs().col(static_cast<Index>(col));
    if (!is_zero(v)) return Witness{condition, all[col], v};
  }
  return std::nullopt;
}

Vec flat(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

Mat act(const std::vector<Mat>& rep, const Vec& x) {
  Mat out = Mat::Zero(rep.front().rows(), rep.front().cols());
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) out += x(i) * rep[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

LieBracket::LieBracket(Cochain c) : c_(std::move(c)) {
  if (c_.arity() != 2 || c_.source_dim() != c_.target_dim())
    throw std::invalid_argument("LieBracket: need an arity-2 cochain g -> g");
}

void LieBracket::add(int i, int j, int k, const Rational& coeff) {
  const int n = dim();
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) throw std::out_of_range("LieBracket::add: index out of range");
  if (i == j) throw std::invalid_argument("LieBracket::add: i must differ from j");
  const int idx[] = {std::min(i, j), std::max(i, j)};
  c_.coeffs()(k, subset_rank(n, idx)) += i < j ? coeff : Rational(-coeff);
}

CompatiblePair::CompatiblePair(LieBracket first, LieBracket second, Unchecked)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.dim() != second_.dim()) throw std::invalid_argument("CompatiblePair: dimension mismatch");
}

CompatiblePair::CompatiblePair(LieBracket first, LieBracket second)
    : CompatiblePair(std::move(first), std::move(second), Unchecked{}) {
  Verdict v = validate_pair(first_, second_);
  if (!v) throw ValidationError("not a compatible pair (" + v.witness->condition + ")", std::move(v));
}

CompatiblePair CompatiblePair::unchecked(LieBracket first, LieBracket second) {
  return CompatiblePair(std::move(first), std::move(second), Unchecked{});
}

RepPair RepPair::zero(int algebra_dim, int module_dim) {
  return {module_dim, std::vector<Mat>(static_cast<std::size_t>(algebra_dim), Mat::Zero(module_dim, module_dim)),
          std::vector<Mat>(static_cast<std::size_t>(algebra_dim), Mat::Zero(module_dim, module_dim))};
}

Verdict validate_bracket(const LieBracket& pi) {
  // [pi, pi] = 2 pi o pi, and (pi o pi)(x,y,z) is the Jacobiator.
  const Cochain jac = nr_compose(pi.cochain(), pi.cochain());
  if (auto w = first_nonzero(jac, "jacobi")) return {false, std::move(w)};
  return Verdict::pass();
}

Verdict validate_pair(const LieBracket& pi1, const LieBracket& pi2) {
  if (pi1.dim() != pi2.dim()) throw std::invalid_argument("validate_pair: dimension mismatch");
  if (auto w = first_nonzero(nr_compose(pi1.cochain(), pi1.cochain()), "pi1")) return {false, std::move(w)};
  if (auto w = first_nonzero(nr_compose(pi2.cochain(), pi2.cochain()), "pi2")) return {false, std::move(w)};
  if (auto w = first_nonzero(nr_bracket(pi1.cochain(), pi2.cochain()), "mixed")) return {false, std::move(w)};
  return Verdict::pass();
}

LieBracket pencil(const CompatiblePair& pair, const Rational& k1, const Rational& k2) {
  return LieBracket(k1 * pair.first().cochain() + k2 * pair.second().cochain());
}

void check_rep_shape(int algebra_dim, const RepPair& rep) {
  if (static_cast<int>(rep.rho.size()) != algebra_dim || static_cast<int>(rep.mu.size()) != algebra_dim)
    throw std::invalid_argument("representation: need one matrix per basis vector");
  for (const auto* family : {&rep.rho, &rep.mu})
    for (const auto& m : *family)
      if (m.rows() != rep.module_dim || m.cols() != rep.module_dim)
        throw std::invalid_argument("representation: matrix size mismatch");
}

Verdict validate_rep(const CompatiblePair& pair, const RepPair& rep) {
  const int n = pair.dim();
  check_rep_shape(n, rep);
  if (rep.module_dim == 0) return Verdict::pass();
  auto single = [&](const LieBracket& pi, const std::vector<Mat>& r, const char* name) -> std::optional<Witness> {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Mat& ri = r[static_cast<std::size_t>(i)];
        const Mat& rj = r[static_cast<std::size_t>(j)];
        const Mat defect = act(r, pi(i, j)) - (ri * rj - rj * ri);
        if (!is_zero(defect)) return Witness{name, {i, j}, flat(defect)};
      }
    return std::nullopt;
  };
  if (auto w = single(pair.first(), rep.rho, "rho")) return {false, std::move(w)};
  if (auto w = single(pair.second(), rep.mu, "mu")) return {false, std::move(w)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Mat& ri = rep.rho[static_cast<std::size_t>(i)];
      const Mat& rj = rep.rho[static_cast<std::size_t>(j)];
      const Mat& mi = rep.mu[static_cast<std::size_t>(i)];
      const Mat& mj = rep.mu[static_cast<std::size_t>(j)];
      const Mat lhs = act(rep.rho, pair.second()(i, j)) + act(rep.mu, pair.first()(i, j));
      const Mat rhs = (ri * mj - mj * ri) - (rj * mi - mi * rj);
      if (lhs != rhs) return Verdict::fail("mixed", {i, j}, flat(lhs - rhs));
    }
  return Verdict::pass();
}

RepPair adjoint_rep(const CompatiblePair& pair) {
  return {pair.dim(), adjoint_matrices(pair.first().cochain()), adjoint_matrices(pair.second().cochain())};
}

}  // namespace compatlie
