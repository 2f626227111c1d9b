#include "compatlie/multilinear.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace compatlie {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Index subset_rank(int n, std::span<const int> increasing) {
  const int k = static_cast<int>(increasing.size());
  Index r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    const int c = increasing[static_cast<std::size_t>(i)];
    for (int j = prev + 1; j < c; ++j) r += binomial(n - 1 - j, k - 1 - i);
    prev = c;
  }
  return r;
}

std::vector<Unshuffle> unshuffles(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("unshuffles: need 0 <= i <= n");
  std::vector<Unshuffle> out;
  for (const auto& first : subsets(n, i)) {
    Unshuffle u;
    u.perm = first;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    int inversions = 0;
    for (int t = 0; t < i; ++t) {
      used[static_cast<std::size_t>(first[static_cast<std::size_t>(t)])] = true;
      inversions += first[static_cast<std::size_t>(t)] - t;
    }
    for (int j = 0; j < n; ++j)
      if (!used[static_cast<std::size_t>(j)]) u.perm.push_back(j);
    u.sign = inversions % 2 == 0 ? 1 : -1;
    out.push_back(std::move(u));
  }
  return out;
}

std::optional<std::pair<Index, int>> sorted_rank(int n, std::vector<int>& args) {
  int sign = 1;
  for (std::size_t i = 1; i < args.size(); ++i) {
    for (std::size_t j = i; j > 0 && args[j - 1] >= args[j]; --j) {
      if (args[j - 1] == args[j]) return std::nullopt;
      std::swap(args[j - 1], args[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < args.size(); ++i)
    if (args[i - 1] == args[i]) return std::nullopt;
  return std::make_pair(subset_rank(n, args), sign);
}

// ---------------------------------------------------------------------------

Cochain::Cochain(int arity, int source_dim, int target_dim)
    : arity_(arity), source_dim_(source_dim), target_dim_(target_dim) {
  if (arity < 0 || source_dim < 0 || target_dim < 0) throw std::invalid_argument("Cochain: negative size");
  coeffs_ = Mat::Zero(target_dim, static_cast<Index>(binomial(source_dim, arity)));
}

Cochain::Cochain(int arity, int source_dim, Mat coeffs)
    : arity_(arity), source_dim_(source_dim), target_dim_(static_cast<int>(coeffs.rows())), coeffs_(std::move(coeffs)) {
  if (coeffs_.cols() != binomial(source_dim, arity)) throw std::invalid_argument("Cochain: wrong column count");
}

Cochain Cochain::identity(int dim) { return Cochain(1, dim, Mat(Mat::Identity(dim, dim))); }

Cochain Cochain::linear(const Mat& m) { return Cochain(1, static_cast<int>(m.cols()), m); }

Cochain Cochain::element(const Vec& v, int source_dim) {
  Mat m(v.size(), 1);
  m.col(0) = v;
  return Cochain(0, source_dim, std::move(m));
}

Cochain Cochain::unflatten(int arity, int source_dim, int target_dim, const Vec& flat) {
  Cochain c(arity, source_dim, target_dim);
  if (flat.size() != c.flat_size()) throw std::invalid_argument("Cochain::unflatten: size mismatch");
  c.coeffs_ = Eigen::Map<const Mat>(flat.data(), target_dim, c.coeffs_.cols());
  return c;
}

Vec Cochain::eval(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("Cochain::eval: wrong argument count");
  std::vector<int> sorted(args.begin(), args.end());
  for (int a : sorted)
    if (a < 0 || a >= source_dim_) throw std::out_of_range("Cochain::eval: index out of range");
  const auto r = sorted_rank(source_dim_, sorted);
  if (!r) return Vec::Zero(target_dim_);
  Vec v = coeffs_.col(r->first);
  if (r->second < 0) v = -v;
  return v;
}

Vec Cochain::apply(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("Cochain::apply: wrong argument count");
  for (const auto& a : args)
    if (a.size() != source_dim_) throw std::invalid_argument("Cochain::apply: wrong vector size");
  Vec out = Vec::Zero(target_dim_);
  std::vector<int> idx(static_cast<std::size_t>(arity_));
  // Depth-first expansion over nonzero coordinates.
  auto recurse = [&](auto&& self, int pos, const Rational& weight) -> void {
    if (pos == arity_) {
      std::vector<int> sorted = idx;
      const auto r = sorted_rank(source_dim_, sorted);
      if (!r) return;
      out += (r->second > 0 ? weight : Rational(-weight)) * coeffs_.col(r->first);
      return;
    }
    const Vec& a = args[static_cast<std::size_t>(pos)];
    for (int i = 0; i < source_dim_; ++i) {
      if (a(i) == 0) continue;
      idx[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, weight * a(i));
    }
  };
  recurse(recurse, 0, Rational(1));
  return out;
}

void Cochain::set(std::span<const int> increasing, const Vec& value) {
  if (static_cast<int>(increasing.size()) != arity_) throw std::invalid_argument("Cochain::set: wrong argument count");
  for (std::size_t i = 0; i < increasing.size(); ++i) {
    if (increasing[i] < 0 || increasing[i] >= source_dim_) throw std::out_of_range("Cochain::set: index out of range");
    if (i > 0 && increasing[i - 1] >= increasing[i]) throw std::invalid_argument("Cochain::set: indices must increase");
  }
  if (value.size() != target_dim_) throw std::invalid_argument("Cochain::set: wrong value size");
  coeffs_.col(subset_rank(source_dim_, increasing)) = value;
}

const Mat& Cochain::as_matrix() const {
  if (arity_ != 1) throw std::logic_error("Cochain::as_matrix: arity must be 1");
  return coeffs_;
}

Vec Cochain::flatten() const { return Eigen::Map<const Vec>(coeffs_.data(), coeffs_.size()); }

void Cochain::check_same_shape(const Cochain& other) const {
  if (arity_ != other.arity_ || source_dim_ != other.source_dim_ || target_dim_ != other.target_dim_)
    throw std::invalid_argument("Cochain: shape mismatch");
}

Cochain& Cochain::operator+=(const Cochain& other) {
  check_same_shape(other);
  coeffs_ += other.coeffs_;
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  check_same_shape(other);
  coeffs_ -= other.coeffs_;
  return *this;
}

Cochain& Cochain::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.arity_ == b.arity_ && a.source_dim_ == b.source_dim_ && a.target_dim_ == b.target_dim_ &&
         a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------

namespace {

void require_endomorphism(const Cochain& c, int n) {
  if (c.source_dim() != n || c.target_dim() != n)
    throw std::invalid_argument("NR bracket: cochains must be endomorphism-valued on the same space");
}

bool odd(int a) { return a % 2 != 0; }

}  // namespace

Cochain nr_compose(const Cochain& p, const Cochain& q) {
  const int n = p.source_dim();
  require_endomorphism(p, n);
  require_endomorphism(q, n);
  const int ap = p.arity();
  const int aq = q.arity();
  if (ap == 0) {
    if (aq == 0) throw std::invalid_argument("nr_compose: both arguments have arity 0");
    return Cochain(aq - 1, n, n);
  }
  const int total = ap + aq - 1;
  Cochain out(total, n, n);
  const auto shuffles = unshuffles(aq, total);
  const auto all = subsets(n, total);
  std::vector<int> inner(static_cast<std::size_t>(aq));
  std::vector<int> outer(static_cast<std::size_t>(ap));
  for (std::size_t col = 0; col < all.size(); ++col) {
    const auto& idx = all[col];
    for (const auto& sh : shuffles) {
      for (int t = 0; t < aq; ++t) inner[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(sh.perm[static_cast<std::size_t>(t)])];
      const Index qcol = subset_rank(n, inner);
      for (int k = 0; k < n; ++k) {
        const Rational& w = q.coeffs()(k, qcol);
        if (w == 0) continue;
        outer[0] = k;
        for (int t = 1; t < ap; ++t)
          outer[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(sh.perm[static_cast<std::size_t>(aq + t - 1)])];
        std::vector<int> sorted = outer;
        const auto r = sorted_rank(n, sorted);
        if (!r) continue;
        const Rational coef = (sh.sign * r->second > 0) ? w : Rational(-w);
        out.coeffs().col(static_cast<Index>(col)) += coef * p.coeffs().col(r->first);
      }
    }
  }
  return out;
}

Cochain nr_bracket(const Cochain& p, const Cochain& q) {
  if (p.arity() == 0 && q.arity() == 0) throw std::invalid_argument("nr_bracket: both arguments have arity 0");
  const int dp = p.arity() - 1;
  const int dq = q.arity() - 1;
  Cochain pq = nr_compose(p, q);
  Cochain qp = nr_compose(q, p);
  if (odd(dp * dq)) return pq + qp;
  return pq - qp;
}

Cochain transform(const Cochain& c, const Mat& t, const Mat& t_inverse) {
  const int n = c.source_dim();
  Cochain out(c.arity(), n, c.target_dim());
  const auto all = subsets(n, c.arity());
  for (std::size_t col = 0; col < all.size(); ++col) {
    std::vector<Vec> args;
    for (int i : all[col]) args.push_back(t_inverse.col(i));
    out.coeffs().col(static_cast<Index>(col)) = t * c.apply(args);
  }
  return out;
}

// ---------------------------------------------------------------------------

MixedMap::MixedMap(int k, int l, int n1, int n2, Side side) : k_(k), l_(l), n1_(n1), n2_(n2), side_(side) {
  if (k < 0 || l < 0) throw std::invalid_argument("MixedMap: negative arity");
  coeffs_ = Mat::Zero(target_dim(), static_cast<Index>(binomial(n1, k) * binomial(n2, l)));
}

Index MixedMap::column(std::span<const int> xs, std::span<const int> vs) const {
  if (static_cast<int>(xs.size()) != k_ || static_cast<int>(vs.size()) != l_)
    throw std::invalid_argument("MixedMap: wrong argument count");
  return subset_rank(n1_, xs) * static_cast<Index>(binomial(n2_, l_)) + subset_rank(n2_, vs);
}

void MixedMap::set(std::span<const int> xs, std::span<const int> vs, const Vec& value) {
  coeffs_.col(column(xs, vs)) = value;
}

MixedMap MixedMap::from_cochain(const Cochain& f, int n2, Side side) {
  const int n1 = f.source_dim();
  MixedMap m(f.arity(), 0, n1, n2, side);
  if (f.target_dim() != m.target_dim()) throw std::invalid_argument("MixedMap::from_cochain: target dimension mismatch");
  m.coeffs_ = f.coeffs();
  return m;
}

MixedMap MixedMap::from_action(const std::vector<Mat>& rho, int n1, int n2) {
  if (static_cast<int>(rho.size()) != n1) throw std::invalid_argument("MixedMap::from_action: need one matrix per basis vector");
  MixedMap m(1, 1, n1, n2, Side::Second);
  for (int x = 0; x < n1; ++x) {
    const Mat& r = rho[static_cast<std::size_t>(x)];
    if (r.rows() != n2 || r.cols() != n2) throw std::invalid_argument("MixedMap::from_action: matrix size mismatch");
    for (int v = 0; v < n2; ++v) {
      const int xs[] = {x};
      const int vs[] = {v};
      m.set(xs, vs, r.col(v));
    }
  }
  return m;
}

LiftedCochain lift(const MixedMap& f) {
  const int n1 = f.n1();
  const int n2 = f.n2();
  const int total = n1 + n2;
  const int arity = f.k() + f.l();
  Cochain out(arity, total, total);
  const auto all = subsets(total, arity);
  const Index offset = f.side() == Side::First ? 0 : n1;
  for (std::size_t col = 0; col < all.size(); ++col) {
    const auto& idx = all[col];
    const int first = static_cast<int>(std::count_if(idx.begin(), idx.end(), [n1](int i) { return i < n1; }));
    if (first != f.k()) continue;
    std::vector<int> xs(idx.begin(), idx.begin() + first);
    std::vector<int> vs;
    for (auto it = idx.begin() + first; it != idx.end(); ++it) vs.push_back(*it - n1);
    out.coeffs().block(offset, static_cast<Index>(col), f.target_dim(), 1) = f.at(xs, vs);
  }
  const Bidegree tag = f.side() == Side::First ? Bidegree{f.k() - 1, f.l()} : Bidegree{f.k(), f.l() - 1};
  return {std::move(out), n1, tag};
}

MixedMap component(const Cochain& f, int split, int k, int l, Side side) {
  const int total = f.source_dim();
  const int n2 = total - split;
  if (f.target_dim() != total || split < 0 || n2 < 0) throw std::invalid_argument("component: bad split");
  if (k + l != f.arity()) throw std::invalid_argument("component: k + l must equal the arity");
  MixedMap m(k, l, split, n2, side);
  const Index offset = side == Side::First ? 0 : split;
  for (const auto& xs : subsets(split, k)) {
    for (const auto& vs : subsets(n2, l)) {
      std::vector<int> idx = xs;
      for (int v : vs) idx.push_back(v + split);
      m.set(xs, vs, f.coeffs().block(offset, subset_rank(total, idx), m.target_dim(), 1));
    }
  }
  return m;
}

BidegreeResult bidegree_of(const Cochain& f, int split) {
  const int total = f.source_dim();
  if (f.target_dim() != total) throw std::invalid_argument("bidegree_of: map must be endomorphism-valued");
  const int arity = f.arity();
  std::optional<int> candidate;
  bool consistent = true;
  const auto all = subsets(total, arity);
  for (std::size_t col = 0; col < all.size() && consistent; ++col) {
    const auto& idx = all[col];
    const int first = static_cast<int>(std::count_if(idx.begin(), idx.end(), [split](int i) { return i < split; }));
    const auto column = f.coeffs().col(static_cast<Index>(col));
    const bool hits_first = !is_zero(column.head(split));
    const bool hits_second = !is_zero(column.tail(total - split));
    auto propose = [&](int k) {
      if (candidate && *candidate != k) consistent = false;
      candidate = k;
    };
    if (hits_first) propose(first - 1);
    if (hits_second) propose(first);
  }
  if (!consistent) return {Homogeneity::NotHomogeneous, {}};
  if (!candidate) return {Homogeneity::ZeroMap, {}};
  return {Homogeneity::Homogeneous, Bidegree{*candidate, arity - 1 - *candidate}};
}

// ---------------------------------------------------------------------------

namespace {

void check_ce_inputs(const Cochain& bracket, const std::vector<Mat>& rho, const Cochain& f) {
  const int n = bracket.source_dim();
  if (bracket.arity() != 2 || bracket.target_dim() != n) throw std::invalid_argument("ce_coboundary: bracket must be wedge^2 g -> g");
  if (static_cast<int>(rho.size()) != n) throw std::invalid_argument("ce_coboundary: need one action matrix per basis vector");
  for (const auto& r : rho)
    if (r.rows() != f.target_dim() || r.cols() != f.target_dim())
      throw std::invalid_argument("ce_coboundary: action matrix size mismatch");
  if (f.source_dim() != n) throw std::invalid_argument("ce_coboundary: cochain source dimension mismatch");
}

}  // namespace

Cochain ce_coboundary(const Cochain& bracket, const std::vector<Mat>& rho, const Cochain& f) {
  check_ce_inputs(bracket, rho, f);
  const int n = f.source_dim();
  const int arity = f.arity();
  Cochain out(arity + 1, n, f.target_dim());
  const auto all = subsets(n, arity + 1);
  std::vector<int> rest;
  for (std::size_t col = 0; col < all.size(); ++col) {
    const auto& idx = all[col];
    Vec acc = Vec::Zero(f.target_dim());
    for (int i = 0; i <= arity; ++i) {
      rest.clear();
      for (int t = 0; t <= arity; ++t)
        if (t != i) rest.push_back(idx[static_cast<std::size_t>(t)]);
      const Vec term = rho[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] * f.eval(rest);
      if (i % 2 == 0) acc += term; else acc -= term;
    }
    for (int i = 0; i <= arity; ++i) {
      for (int j = i + 1; j <= arity; ++j) {
        const int a = idx[static_cast<std::size_t>(i)];
        const int b = idx[static_cast<std::size_t>(j)];
        const int ab[] = {a, b};
        const Vec br = bracket.coeffs().col(subset_rank(n, ab));
        const bool negative = (i + j) % 2 != 0;
        for (int k = 0; k < n; ++k) {
          if (br(k) == 0) continue;
          rest.assign(1, k);
          for (int t = 0; t <= arity; ++t)
            if (t != i && t != j) rest.push_back(idx[static_cast<std::size_t>(t)]);
          const Vec term = br(k) * f.eval(rest);
          if (negative) acc -= term; else acc += term;
        }
      }
    }
    out.coeffs().col(static_cast<Index>(col)) = acc;
  }
  return out;
}

Cochain ce_coboundary_nr(const Cochain& bracket, const std::vector<Mat>& rho, const Cochain& f) {
  check_ce_inputs(bracket, rho, f);
  const int n = f.source_dim();
  const int m = f.target_dim();
  const auto pi_hat = lift(MixedMap::from_cochain(bracket, m, Side::First));
  const auto rho_hat = lift(MixedMap::from_action(rho, n, m));
  const auto f_hat = lift(MixedMap::from_cochain(f, m, Side::Second));
  Cochain b = nr_bracket(pi_hat.map + rho_hat.map, f_hat.map);
  const MixedMap part = component(b, n, f.arity() + 1, 0, Side::Second);
  Cochain out(f.arity() + 1, n, part.coeffs());
  // (-1)^{n-1}: negative exactly when n is even (including n = 0).
  if (f.arity() % 2 == 0) out *= Rational(-1);
  return out;
}

std::vector<Mat> adjoint_matrices(const Cochain& bracket) {
  const int n = bracket.source_dim();
  if (bracket.arity() != 2 || bracket.target_dim() != n) throw std::invalid_argument("adjoint_matrices: not a bracket");
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i) {
    Mat ad = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) ad.col(j) = bracket.eval({i, j});
    out.push_back(std::move(ad));
  }
  return out;
}

}  // namespace compatlie
