#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "arbor/digraph.hpp"

namespace arbor {

/// Spanning directed tree: one chosen in-arc per non-root vertex, no cycles.
struct Arborescence {
  VertexId root = kRoot;
  /// Chosen in-arcs ordered by target vertex.
  std::vector<ArcId> arcs;

  friend bool operator==(const Arborescence&, const Arborescence&) = default;
};

/// Enumeration refuses inputs whose in-arc selection space exceeds this.
inline constexpr double kEnumerationLimit = 1e7;

namespace detail {

/// Calls `visit(chosen)` for every arborescence of `g` rooted at `root`, where
/// `chosen[k]` is the in-arc picked for the k-th non-root vertex (ascending).
/// Selections are visited in lexicographic order of in-arc positions, last
/// vertex varying fastest.
template <Weight W, class Visit>
void for_each_arborescence(const Digraph<W>& g, VertexId root, Visit&& visit) {
  g.check_vertex(root);
  const std::size_t n = g.vertex_count();

  std::vector<VertexId> vertices;
  std::vector<std::vector<const Arc<W>*>> choices;
  double space = 1.0;
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    std::vector<const Arc<W>*> in;
    for (const auto& a : g.arcs()) {
      if (a.target == v) in.push_back(&a);
    }
    if (in.empty()) return;  // v can never be spanned
    space *= static_cast<double>(in.size());
    vertices.push_back(v);
    choices.push_back(std::move(in));
  }
  if (space > kEnumerationLimit) {
    throw Error(ErrorCode::TooLarge, "in-arc selection space " + std::to_string(space) + " exceeds 1e7");
  }

  const std::size_t k = vertices.size();
  std::vector<std::size_t> position(k, 0);
  std::vector<const Arc<W>*> chosen(k);
  std::vector<VertexId> parent(n, root);
  // 0 = unknown, 1 = on current walk, 2 = reaches root
  std::vector<unsigned char> state(n);
  std::vector<VertexId> walk;

  for (;;) {
    for (std::size_t i = 0; i < k; ++i) {
      chosen[i] = choices[i][position[i]];
      parent[vertices[i]] = chosen[i]->source;
    }
    std::fill(state.begin(), state.end(), 0);
    state[root] = 2;
    bool acyclic = true;
    for (std::size_t i = 0; i < k && acyclic; ++i) {
      VertexId v = vertices[i];
      walk.clear();
      while (state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        v = parent[v];
      }
      if (state[v] == 1) acyclic = false;
      for (VertexId w : walk) state[w] = 2;
    }
    if (acyclic) visit(std::span<const Arc<W>* const>(chosen));

    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++position[i] < choices[i].size()) break;
      position[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace detail

/// Every arborescence of `g` rooted at `root`, each exactly once, in a fixed
/// order. Empty when some non-root vertex has no in-arc. Throws TooLarge when
/// the product of in-degrees exceeds 1e7.
template <Weight W>
std::vector<Arborescence> enumerate_arborescences(const Digraph<W>& g, VertexId root) {
  std::vector<Arborescence> out;
  detail::for_each_arborescence(g, root, [&](std::span<const Arc<W>* const> chosen) {
    Arborescence a{root, {}};
    a.arcs.reserve(chosen.size());
    for (const auto* arc : chosen) a.arcs.push_back(arc->id);
    out.push_back(std::move(a));
  });
  return out;
}

/// Product of the arc weights; the empty product is one.
template <Weight W>
W arborescence_weight(const Arborescence& a, const Digraph<W>& g) {
  std::vector<W> factors;
  factors.reserve(a.arcs.size());
  for (ArcId id : a.arcs) factors.push_back(g.arc(id).weight);
  return product_all(std::move(factors));
}

/// Sum of arborescence weights. Symbolic results come back as canonical
/// polynomials.
template <Weight W>
W arborescence_sum(const Digraph<W>& g, VertexId root) {
  std::vector<W> terms;
  detail::for_each_arborescence(g, root, [&](std::span<const Arc<W>* const> chosen) {
    std::vector<W> factors;
    factors.reserve(chosen.size());
    for (const auto* arc : chosen) factors.push_back(arc->weight);
    terms.push_back(product_all(std::move(factors)));
  });
  return WeightTraits<W>::normalize(sum_all(std::move(terms)));
}

/// Number of arborescences.
template <Weight W>
std::size_t count_arborescences(const Digraph<W>& g, VertexId root) {
  std::size_t count = 0;
  detail::for_each_arborescence(g, root, [&](std::span<const Arc<W>* const>) { ++count; });
  return count;
}

/// Number of arborescences that use `arc`.
template <Weight W>
std::size_t count_arborescences_containing(const Digraph<W>& g, VertexId root, ArcId arc) {
  std::size_t count = 0;
  detail::for_each_arborescence(g, root, [&](std::span<const Arc<W>* const> chosen) {
    for (const auto* a : chosen) {
      if (a->id == arc) {
        ++count;
        break;
      }
    }
  });
  return count;
}

}  // namespace arbor
