#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/transforms.hpp"

namespace arbor {

/// Dense square matrix, row-major, 0-based. Row/column i corresponds to
/// vertex i + 1 of the matrix digraph.
template <Weight W>
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), entries_(n * n, WeightTraits<W>::zero()) {
    if (n == 0) throw Error(ErrorCode::NotSquare, "matrix must be at least 1x1");
  }

  /// Throws NotSquare unless every row has `rows.size()` entries.
  static Matrix from_rows(const std::vector<std::vector<W>>& rows) {
    if (rows.empty()) throw Error(ErrorCode::NotSquare, "matrix has no rows");
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                              " entries, expected " + std::to_string(rows.size()));
      }
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = WeightTraits<W>::one();
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  W& operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
  const W& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }

  template <class F>
  auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const W&>()))>> {
    Matrix<std::decay_t<decltype(f(std::declval<const W&>()))>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<W> entries_;
};

/// Builds the matrix digraph: vertices {0..n}; for i != j an arc (i, j) of
/// weight -a_ij when that entry is nonzero; for each column j a root arc
/// (0, j) carrying a_jj minus the off-diagonal column weights. Numeric zero
/// root weights are omitted, symbolic ones are always emitted. Arcs into
/// vertex j are inserted in row order, the root arc taking the diagonal slot.
template <Weight W>
Digraph<W> matrix_to_digraph(const Matrix<W>& a) {
  using Traits = WeightTraits<W>;
  const std::size_t n = a.size();
  std::vector<std::tuple<VertexId, VertexId, W>> arcs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<W> column;
    std::vector<std::tuple<VertexId, VertexId, W>> column_arcs;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      W u = Traits::normalize(W(-a(i, j)));
      column.push_back(u);
      if (!Traits::is_zero(u)) column_arcs.emplace_back(i + 1, j + 1, u);
    }
    W root_weight = a(j, j);
    for (const auto& u : column) root_weight = root_weight - u;
    root_weight = Traits::normalize(root_weight);

    for (std::size_t i = 0, next = 0; i < n; ++i) {
      if (i == j) {
        if (Traits::symbolic || !Traits::is_zero(root_weight)) arcs.emplace_back(kRoot, j + 1, root_weight);
      } else if (next < column_arcs.size() && std::get<0>(column_arcs[next]) == i + 1) {
        arcs.push_back(column_arcs[next++]);
      }
    }
  }
  return Digraph<W>::from_arcs(n + 1, arcs);
}

/// Inverse of matrix_to_digraph: a_ij = -(sum of weights of arcs i -> j) and
/// a_jj = sum of all in-arc weights of j (root arcs included). Parallel arcs
/// are summed. Throws RootHasInArcs unless the digraph is root-valid.
template <Weight W>
Matrix<W> digraph_to_matrix(const Digraph<W>& g) {
  if (!g.is_root_valid()) throw Error(ErrorCode::RootHasInArcs, "vertex 0 must have no in-arcs");
  const std::size_t n = g.vertex_count() - 1;
  if (n == 0) throw Error(ErrorCode::NotSquare, "a one-vertex digraph has no matrix");
  std::vector<std::vector<std::vector<W>>> off(n, std::vector<std::vector<W>>(n));
  std::vector<std::vector<W>> diagonal(n);
  for (const auto& arc : g.arcs()) {
    diagonal[arc.target - 1].push_back(arc.weight);
    if (arc.source != kRoot) off[arc.source - 1][arc.target - 1].push_back(arc.weight);
  }
  Matrix<W> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m(i, j) = sum_all(std::move(diagonal[j]));
      } else if (!off[i][j].empty()) {
        m(i, j) = W(-sum_all(std::move(off[i][j])));
      }
    }
  }
  return m;
}

/// Determinant as the arborescence sum of the matrix digraph at root 0.
/// Throws TooLarge past the enumeration guard rail.
template <Weight W>
W det_via_arborescences(const Matrix<W>& a) {
  return arborescence_sum(matrix_to_digraph(a), kRoot);
}

/// Absolute pivot magnitude below which det_reference reports exact zero.
inline constexpr double kSingularPivot = 1e-12;

/// Gaussian elimination with partial pivoting.
double det_reference(const Matrix<double>& a);

/// Numeric entries only; throws NonNumericWeight on any non-constant entry.
double det_reference(const Matrix<Expr>& a);

/// The n x n matrix assembled from variables u_ij: a_ij = -u_ij off the
/// diagonal and a_jj = sum over k of u_kj.
Matrix<Expr> symbolic_u_matrix(std::size_t n);

}  // namespace arbor
