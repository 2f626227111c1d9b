#include "compatlie/sampling.hpp"

#include "compatlie/linalg.hpp"

#include <algorithm>

namespace compatlie::sampling {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LieBracket random_dim2(Rng& rng) {
  LieBracket b(2);
  const Vec v = random_vector(rng, 2);
  for (int k = 0; k < 2; ++k) b.add(0, 1, k, v(k));
  return b;
}

// [x, y] = A (x cross y) with A symmetric.
LieBracket cross_type(const Mat& a) {
  LieBracket b(3);
  for (int k = 0; k < 3; ++k) {
    b.add(0, 1, k, a(k, 2));
    b.add(0, 2, k, -a(k, 1));
    b.add(1, 2, k, a(k, 0));
  }
  return b;
}

Mat random_symmetric(Rng& rng, int n) {
  Mat a = random_matrix(rng, n, n, -1, 1);
  return a + a.transpose();
}

CompatiblePair conjugate_pair(Rng& rng, const CompatiblePair& p) {
  const Mat t = random_invertible(rng, p.dim());
  const Mat ti = *inverse(t);
  return CompatiblePair(LieBracket(transform(p.first().cochain(), t, ti)),
                        LieBracket(transform(p.second().cochain(), t, ti)));
}

CompatiblePair sum_pair(const CompatiblePair& a, const CompatiblePair& b) {
  return CompatiblePair(direct_sum(a.first(), b.first()), direct_sum(a.second(), b.second()));
}

RepPair character_rep(Rng& rng, const CompatiblePair& pair, int m) {
  const int n = pair.dim();
  // Linear forms vanishing on every bracket value of either bracket.
  Mat values(2 * static_cast<Index>(binomial(n, 2)), n);
  Index row = 0;
  for (const auto* b : {&pair.first(), &pair.second()})
    for (Index c = 0; c < b->cochain().coeffs().cols(); ++c) values.row(row++) = b->cochain().coeffs().col(c).transpose();
  const SubspaceBasis forms = kernel_basis(values);
  Vec lambda = Vec::Zero(n), nu = Vec::Zero(n);
  for (const auto& f : forms.vectors) {
    lambda += small_int(rng) * f;
    nu += small_int(rng) * f;
  }
  const Mat a = random_matrix(rng, m, m);
  const Mat b = small_int(rng) * Mat(Mat::Identity(m, m)) + small_int(rng) * a;
  RepPair rep{m, {}, {}};
  for (int i = 0; i < n; ++i) {
    rep.rho.push_back(lambda(i) * a);
    rep.mu.push_back(nu(i) * b);
  }
  return rep;
}

RepPair base_rep(Rng& rng, const CompatiblePair& pair, int max_module_dim) {
  const int n = pair.dim();
  const int m = uniform(rng, 1, max_module_dim);
  switch (uniform(rng, 0, 4)) {
    case 0:
      return RepPair::zero(n, m);
    case 1:
      if (n <= max_module_dim) return adjoint_rep(pair);
      break;
    case 2:
      if (n <= max_module_dim) return coadjoint_rep(pair);
      break;
    case 3:
      if (m >= 2) {
        const int m1 = uniform(rng, 1, m - 1);
        return direct_sum(character_rep(rng, pair, m1), base_rep(rng, pair, m - m1));
      }
      break;
    default:
      break;
  }
  return character_rep(rng, pair, m);
}

}  // namespace

Rational small_int(Rng& rng, int lo, int hi) { return Rational(uniform(rng, lo, hi)); }

Mat random_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = small_int(rng, lo, hi);
  return m;
}

Vec random_vector(Rng& rng, int size, int lo, int hi) { return random_matrix(rng, size, 1, lo, hi).col(0); }

Mat random_invertible(Rng& rng, int n) {
  Mat lower = Mat::Identity(n, n), upper = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      lower(i, j) = small_int(rng, -1, 1);
      upper(j, i) = small_int(rng, -1, 1);
    }
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  Mat perm = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) perm(i, p[static_cast<std::size_t>(i)]) = 1;
  return perm * lower * upper;
}

Cochain random_cochain(Rng& rng, int arity, int source_dim, int target_dim) {
  Cochain c(arity, source_dim, target_dim);
  c.coeffs() = random_matrix(rng, target_dim, static_cast<int>(c.num_subsets()));
  return c;
}

LieBracket direct_sum(const LieBracket& a, const LieBracket& b) {
  const int n1 = a.dim();
  const int n = n1 + b.dim();
  LieBracket out(n);
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j) {
      const Vec v = a(i, j);
      for (int k = 0; k < n1; ++k)
        if (v(k) != 0) out.add(i, j, k, v(k));
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      const Vec v = b(i, j);
      for (int k = 0; k < b.dim(); ++k)
        if (v(k) != 0) out.add(n1 + i, n1 + j, n1 + k, v(k));
    }
  return out;
}

CompatiblePair random_pair(Rng& rng, int dim) {
  switch (dim) {
    case 1:
      return CompatiblePair(LieBracket(1), LieBracket(1));
    case 2:
      return CompatiblePair(random_dim2(rng), random_dim2(rng));
    case 3:
      if (uniform(rng, 0, 3) == 0) return conjugate_pair(rng, sum_pair(random_pair(rng, 2), random_pair(rng, 1)));
      return CompatiblePair(cross_type(random_symmetric(rng, 3)), cross_type(random_symmetric(rng, 3)));
    case 4: {
      const int split = uniform(rng, 0, 1) == 0 ? 2 : 3;
      return conjugate_pair(rng, sum_pair(random_pair(rng, split), random_pair(rng, 4 - split)));
    }
    default:
      throw std::invalid_argument("random_pair: dimension must be 1..4");
  }
}

RepPair coadjoint_rep(const CompatiblePair& pair) {
  RepPair ad = adjoint_rep(pair);
  for (auto* family : {&ad.rho, &ad.mu})
    for (auto& m : *family) m = Mat(-m.transpose());
  return ad;
}

RepPair direct_sum(const RepPair& a, const RepPair& b) {
  const int m = a.module_dim + b.module_dim;
  RepPair out{m, {}, {}};
  auto block = [&](const Mat& x, const Mat& y) {
    Mat r = Mat::Zero(m, m);
    r.topLeftCorner(a.module_dim, a.module_dim) = x;
    r.bottomRightCorner(b.module_dim, b.module_dim) = y;
    return r;
  };
  for (std::size_t i = 0; i < a.rho.size(); ++i) {
    out.rho.push_back(block(a.rho[i], b.rho[i]));
    out.mu.push_back(block(a.mu[i], b.mu[i]));
  }
  return out;
}

RepPair conjugate(const RepPair& rep, const Mat& t, const Mat& t_inverse) {
  RepPair out{rep.module_dim, {}, {}};
  for (const auto& r : rep.rho) out.rho.push_back(t * r * t_inverse);
  for (const auto& r : rep.mu) out.mu.push_back(t * r * t_inverse);
  return out;
}

RepPair random_rep(Rng& rng, const CompatiblePair& pair, int max_module_dim) {
  RepPair rep = base_rep(rng, pair, max_module_dim);
  if (uniform(rng, 0, 1) == 1) {
    const Mat t = random_invertible(rng, rep.module_dim);
    rep = conjugate(rep, t, *inverse(t));
  }
  if (!validate_rep(pair, rep)) throw std::logic_error("random_rep: generated an invalid representation");
  return rep;
}

ExtensionDatum random_extension(Rng& rng, int g_dim, int h_dim) {
  const CompatiblePair g = random_pair(rng, g_dim);
  if (uniform(rng, 0, 1) == 0) {
    RepPair rep = random_rep(rng, g, h_dim);
    while (rep.module_dim != h_dim) rep = random_rep(rng, g, h_dim);
    const ComplexSlice s2 = coboundary_matrix(g, rep, 2);
    const SubspaceBasis cocycles = kernel_basis(s2.matrix);
    Vec w = Vec::Zero(s2.matrix.cols());
    for (const auto& v : cocycles.vectors) w += small_int(rng, -1, 1) * v;
    const CochainTuple t = unflatten_tuple(2, g_dim, rep.module_dim, w);
    const int m = rep.module_dim;
    return {g, CompatiblePair(LieBracket(m), LieBracket(m)), rep.rho, rep.mu, t.components[0], t.components[1]};
  }
  const CompatiblePair h = random_pair(rng, h_dim);
  return gauge_transform(product_datum(g, h), random_matrix(rng, h_dim, g_dim, -1, 1));
}

ExtensionDatum perturb(Rng& rng, ExtensionDatum d) {
  const int n = d.g_dim(), m = d.h_dim();
  const Rational delta = uniform(rng, 0, 1) == 0 ? Rational(1) : Rational(-1);
  const int which = n >= 2 ? uniform(rng, 0, 3) : uniform(rng, 0, 1);
  if (which < 2) {
    auto& mats = which == 0 ? d.rho : d.mu;
    mats[static_cast<std::size_t>(uniform(rng, 0, n - 1))](uniform(rng, 0, m - 1), uniform(rng, 0, m - 1)) += delta;
  } else {
    Cochain& w = which == 2 ? d.omega1 : d.omega2;
    w.coeffs()(uniform(rng, 0, m - 1), uniform(rng, 0, static_cast<int>(w.num_subsets()) - 1)) += delta;
  }
  return d;
}

}  // namespace compatlie::sampling
