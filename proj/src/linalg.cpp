#include "compatlie/linalg.hpp"

namespace compatlie {

Index rank_fraction_free(const Mat& m) {
  MatX<Integer> ints(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      const Integer d = denominator(m(i, j));
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    for (Index j = 0; j < m.cols(); ++j)
      ints(i, j) = numerator(m(i, j)) * (scale / denominator(m(i, j)));
  }
  return bareiss_rank(std::move(ints));
}

}  // namespace compatlie
