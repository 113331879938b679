#pragma once

#include <map>
#include <string>
#include <vector>

#include "arbor/digraph.hpp"
#include "arbor/expr.hpp"
#include "arbor/matrix.hpp"

namespace arbor::testing {

inline Expr var(const std::string& name) { return Expr::variable(name); }
inline Expr ex(const std::string& text) { return parse_expr(text); }

/// Upper-triangular example matrix whose digraph has no strongly connected pair.
inline Matrix<Expr> upper_triangular_matrix() {
  return Matrix<Expr>::from_rows({
      {ex("u11"), ex("-u12"), ex("-u13")},
      {Expr(), ex("u12 + u22"), ex("-u23")},
      {Expr(), Expr(), ex("u13 + u23 + u33")},
  });
}

/// Full 3x3 example matrix; its digraph is complete on {1, 2, 3}.
inline Matrix<Expr> full_matrix() {
  return Matrix<Expr>::from_rows({
      {ex("u11 + u21 + u31"), ex("-u12"), ex("-u13")},
      {ex("-u21"), ex("u12 + u22 + u32"), ex("-u23")},
      {ex("-u31"), ex("-u32"), ex("u13 + u23 + u33")},
  });
}

/// The six summands of the published sequential factorization of full_matrix.
inline std::vector<Expr> published_sequential_terms() {
  return {
      ex("u11·(u12 + u22)·(u13 + u23 + u33)"),
      ex("u11·u32·(u13 + u33)"),
      ex("(u21 + u31)·u22·(u33 + u23)"),
      ex("u21·u22·u13"),
      ex("u31·(u12 + u32)·u33"),
      ex("u21·u32·u33"),
  };
}

/// Every u_ij of an n x n example set to `value`.
inline std::map<std::string, Rational> uniform_assignment(std::size_t n, Rational value) {
  std::map<std::string, Rational> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) out[variable_name(i, j)] = value;
  }
  return out;
}

}  // namespace arbor::testing
