#include "arbor/random.hpp"

namespace arbor {

Matrix<double> random_u_matrix(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix<double> m(n);
  for (std::size_t j = 0; j < n; ++j) {
    double column = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double u = unit(rng);
      column += u;
      if (k != j) m(k, j) = -u;
    }
    m(j, j) = column;
  }
  return m;
}

Matrix<double> random_signed_matrix(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  Matrix<double> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  }
  return m;
}

}  // namespace arbor
