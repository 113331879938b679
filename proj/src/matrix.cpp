#include "arbor/matrix.hpp"

#include <cmath>
#include <utility>

namespace arbor {

double det_reference(const Matrix<double>& a) {
  const std::size_t n = a.size();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  }
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    }
    if (std::abs(m[pivot * n + col]) < kSingularPivot) return 0.0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[pivot * n + k], m[col * n + k]);
      det = -det;
    }
    const double p = m[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = m[r * n + col] / p;
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) m[r * n + k] -= factor * m[col * n + k];
    }
  }
  return det;
}

double det_reference(const Matrix<Expr>& a) {
  auto numeric = a.map([](const Expr& e) {
    Expr c = canonical_polynomial(e);
    if (!c.is_constant()) throw Error(ErrorCode::NonNumericWeight, "entry '" + to_string(e) + "' is not a number");
    return c.value().convert_to<double>();
  });
  return det_reference(numeric);
}

Matrix<Expr> symbolic_u_matrix(std::size_t n) {
  Matrix<Expr> m(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Expr> column;
    for (std::size_t k = 0; k < n; ++k) column.push_back(Expr::variable(variable_name(k + 1, j + 1)));
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) m(i, j) = -Expr::variable(variable_name(i + 1, j + 1));
    }
    m(j, j) = Expr::sum_of(std::move(column));
  }
  return m;
}

}  // namespace arbor
