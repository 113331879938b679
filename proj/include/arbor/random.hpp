#pragma once

#include <cstddef>
#include <algorithm>
#include <random>
#include <tuple>

#include "arbor/digraph.hpp"
#include "arbor/matrix.hpp"

namespace arbor {

using Rng = std::mt19937_64;

struct RandomGraphOptions {
  std::size_t min_vertices = 1;  // non-root vertices
  std::size_t max_vertices = 5;
  double root_arc_probability = 0.8;
  double arc_probability = 0.45;
  double parallel_probability = 0.2;
};

inline double random_positive_double(Rng& rng) { return std::uniform_real_distribution<double>(0.1, 2.0)(rng); }

/// p / q with p in 1..9 and q in 1..5.
inline Rational random_positive_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  return Rational(num(rng), den(rng));
}

/// Root-valid multidigraph on {0..n}: random root arcs, random arcs between
/// non-root vertices, occasionally duplicated to create parallels.
template <Weight W, class WeightGen>
Digraph<W> random_root_valid_digraph(Rng& rng, const RandomGraphOptions& options, WeightGen&& weight) {
  std::uniform_int_distribution<std::size_t> size(options.min_vertices, options.max_vertices);
  std::bernoulli_distribution root_arc(options.root_arc_probability);
  std::bernoulli_distribution inner_arc(options.arc_probability);
  std::bernoulli_distribution parallel(options.parallel_probability);
  const std::size_t n = size(rng);
  std::vector<std::tuple<VertexId, VertexId, W>> arcs;
  for (VertexId j = 1; j <= n; ++j) {
    for (VertexId i = 0; i <= n; ++i) {
      if (i == j) continue;
      if (!(i == kRoot ? root_arc(rng) : inner_arc(rng))) continue;
      arcs.emplace_back(i, j, weight(rng));
      if (parallel(rng)) arcs.emplace_back(i, j, weight(rng));
    }
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Digraph<W>::from_arcs(n + 1, arcs);
}

/// Matrix assembled from u_ij uniform in [0, 1]: a_ij = -u_ij, a_jj = sum_k u_kj.
Matrix<double> random_u_matrix(Rng& rng, std::size_t n);

/// Entries uniform in [-1, 1].
Matrix<double> random_signed_matrix(Rng& rng, std::size_t n);

}  // namespace arbor
