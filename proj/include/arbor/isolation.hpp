#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arbor/digraph.hpp"
#include "arbor/transforms.hpp"

namespace arbor {

// ---------------------------------------------------------------------------
// Counting

using BigCount = boost::multiprecision::uint128_t;

/// Number of weak orderings of n elements (1, 1, 3, 13, 75, 541, ...).
/// Throws TooLarge for n > 20.
BigCount ordered_bell(std::size_t n);

/// Nonempty subsets of n vertices: 2^n - 1. Throws TooLarge for n > 20.
std::uint64_t rooted_subset_count(std::size_t n);

// ---------------------------------------------------------------------------
// Rooting and isolation

template <Weight W>
struct RootSplit {
  Digraph<W> rooted;    // only in-arc to v is (0, v)
  Digraph<W> unrooted;  // no arc (0, v)
};

/// Splits `g` into the part whose arborescences reach v straight from the root
/// and the part where they do not. The two arborescence sums add up to that of
/// `g`. Parallel root arcs into v are combined in the rooted part.
///
/// Errors: RootQuery (v == 0), VertexOutOfRange, NoRootArc.
template <Weight W>
RootSplit<W> root_split(const Digraph<W>& g, VertexId v) {
  g.check_non_root(v);
  Digraph<W> rooted = g;
  Digraph<W> unrooted = g;
  std::vector<ArcId> root_arcs;
  for (const auto& a : g.arcs()) {
    if (a.target != v) continue;
    if (a.source == kRoot) {
      root_arcs.push_back(a.id);
      unrooted = unrooted.remove_arc(a.id);
    } else {
      rooted = rooted.remove_arc(a.id);
    }
  }
  if (root_arcs.empty()) throw Error(ErrorCode::NoRootArc, "vertex " + std::to_string(v) + " has no arc from 0");
  ArcId merged = root_arcs.front();
  for (std::size_t i = 1; i < root_arcs.size(); ++i) {
    std::tie(rooted, merged) = combine_arcs_with_id(rooted, merged, root_arcs[i]);
  }
  return {std::move(rooted), std::move(unrooted)};
}

/// Moves every out-arc (j, k) of a rooted vertex j to (0, k) and folds it into
/// an existing root arc of k (existing weight first). Afterwards j is
/// isolated; the arborescence sum is unchanged.
///
/// Errors: NotRooted, RootQuery, VertexOutOfRange.
template <Weight W>
Digraph<W> isolate_vertex(const Digraph<W>& g, VertexId j) {
  if (!g.is_rooted_at(j)) throw Error(ErrorCode::NotRooted, "vertex " + std::to_string(j) + " is not rooted");
  Digraph<W> out = g;
  for (const auto& arc : g.out_arcs(j)) {
    out = move_arc(out, arc.id, kRoot);
    const Arc<W>* existing = nullptr;
    for (const auto& a : out.arcs()) {
      if (a.source == kRoot && a.target == arc.target && a.id != arc.id) {
        existing = &a;
        break;
      }
    }
    if (existing != nullptr) out = combine_arcs(out, existing->id, arc.id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factorization

enum class Strategy { Sequential, Partitioned };

std::string_view to_string(Strategy s);

/// Throws Parse for anything but "sequential" / "partitioned".
Strategy parse_strategy(std::string_view text);

/// One fully isolated leaf: the determinant contribution is the product of its
/// root-arc weights.
template <Weight W>
struct FactorTerm {
  /// factors[k - 1] is the weight of the root arc into vertex k, normalized.
  std::vector<W> factors;
  /// Vertices in the order they were isolated, grouped by step. Singleton
  /// groups for the sequential strategy; a weak ordering for the partitioned one.
  std::vector<std::vector<VertexId>> levels;

  W product() const { return product_all(factors); }

  std::vector<VertexId> isolation_order() const {
    std::vector<VertexId> out;
    for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
    return out;
  }
};

template <Weight W>
struct Factorization {
  Strategy strategy = Strategy::Sequential;
  std::vector<FactorTerm<W>> terms;
  /// Leaves or branches dropped because their weight is zero.
  std::size_t pruned = 0;

  std::size_t leaf_count() const noexcept { return terms.size(); }

  /// Sum of the term products, left unexpanded.
  W total() const {
    std::vector<W> products;
    products.reserve(terms.size());
    for (const auto& t : terms) products.push_back(t.product());
    return sum_all(std::move(products));
  }
};

/// Snapshot handed to FactorOptions::observer for every intermediate digraph.
struct FactorStep {
  enum class Kind { Rooted, Isolated, Leaf };
  Kind kind = Kind::Rooted;
  /// Isolation history of this branch including the current step.
  std::vector<std::vector<VertexId>> levels;
  /// Vertices rooted at this step, and active vertices forced to be unrooted.
  std::vector<VertexId> rooted;
  std::vector<VertexId> unrooted;
};

std::string_view to_string(FactorStep::Kind kind);

/// Factoring stops with TooLarge once this many leaves have been produced.
inline constexpr std::size_t kFactorLeafLimit = 1'000'000;

template <Weight W>
struct FactorOptions {
  /// Vertex priority; empty means 1, 2, ..., n.
  std::vector<VertexId> order;
  std::function<void(const FactorStep&, const Digraph<W>&)> observer;
};

namespace detail {

template <Weight W>
struct FactorTask {
  Digraph<W> graph;
  std::vector<VertexId> active;
  std::vector<std::vector<VertexId>> levels;
};

template <Weight W>
std::vector<VertexId> resolve_order(const Digraph<W>& g, const std::vector<VertexId>& requested) {
  if (!g.is_root_valid()) throw Error(ErrorCode::RootHasInArcs, "vertex 0 must have no in-arcs");
  const std::size_t n = g.vertex_count() - 1;
  if (requested.empty()) {
    std::vector<VertexId> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
    return order;
  }
  std::vector<bool> seen(n + 1, false);
  for (VertexId v : requested) {
    g.check_non_root(v);
    if (seen[v]) throw Error(ErrorCode::Parse, "vertex " + std::to_string(v) + " repeated in isolation order");
    seen[v] = true;
  }
  if (requested.size() != n) throw Error(ErrorCode::Parse, "isolation order must list every vertex 1.." + std::to_string(n));
  return requested;
}

template <Weight W>
Digraph<W> ensure_root_arc(const Digraph<W>& g, VertexId v) {
  for (const auto& a : g.arcs()) {
    if (a.source == kRoot && a.target == v) return g;
  }
  return g.add_arc(kRoot, v, WeightTraits<W>::zero()).first;
}

/// A rooted vertex keeps its root arc unchanged down to every leaf, so a zero
/// weight there zeroes the whole branch.
template <Weight W>
bool zero_root_weight(const Digraph<W>& g, const std::vector<VertexId>& rooted) {
  for (const auto& a : g.arcs()) {
    if (a.source != kRoot || !WeightTraits<W>::is_zero(a.weight)) continue;
    if (std::find(rooted.begin(), rooted.end(), a.target) != rooted.end()) return true;
  }
  return false;
}

template <Weight W>
bool has_unreachable_vertex(const Digraph<W>& g, const std::vector<VertexId>& active) {
  for (VertexId v : active) {
    if (g.in_degree(v) == 0) return true;
  }
  return false;
}

template <Weight W>
void emit(const FactorOptions<W>& options, FactorStep::Kind kind, const std::vector<std::vector<VertexId>>& levels,
          const std::vector<VertexId>& rooted, const std::vector<VertexId>& unrooted, const Digraph<W>& g) {
  if (options.observer) options.observer(FactorStep{kind, levels, rooted, unrooted}, g);
}

/// Records a fully isolated digraph as a term unless one of its weights is zero.
template <Weight W>
void emit_leaf(const FactorTask<W>& task, const FactorOptions<W>& options, Factorization<W>& out) {
  const std::size_t n = task.graph.vertex_count() - 1;
  FactorTerm<W> term;
  term.factors.reserve(n);
  for (VertexId v = 1; v <= n; ++v) {
    auto in = task.graph.in_arcs(v);
    term.factors.push_back(WeightTraits<W>::normalize(in.front().weight));
  }
  for (const auto& f : term.factors) {
    if (WeightTraits<W>::is_zero(f)) {
      ++out.pruned;
      return;
    }
  }
  term.levels = task.levels;
  emit(options, FactorStep::Kind::Leaf, task.levels, {}, {}, task.graph);
  out.terms.push_back(std::move(term));
  if (out.terms.size() > kFactorLeafLimit) {
    throw Error(ErrorCode::TooLarge, "factorization exceeds " + std::to_string(kFactorLeafLimit) + " terms");
  }
}

/// Depth-first over an explicit stack; `expand` appends children in the order
/// they should be visited.
template <Weight W, class Expand>
Factorization<W> run_factor(const Digraph<W>& g, Strategy strategy, const FactorOptions<W>& options, Expand expand) {
  Factorization<W> out;
  out.strategy = strategy;
  std::vector<FactorTask<W>> stack;
  stack.push_back(FactorTask<W>{g, resolve_order(g, options.order), {}});
  std::vector<FactorTask<W>> children;
  while (!stack.empty()) {
    FactorTask<W> task = std::move(stack.back());
    stack.pop_back();
    if (task.active.empty()) {
      emit_leaf(task, options, out);
      continue;
    }
    if (has_unreachable_vertex(task.graph, task.active)) {
      ++out.pruned;
      continue;
    }
    children.clear();
    expand(task, children, out);
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return out;
}

}  // namespace detail

/// Sequential rooting: the branch for the k-th vertex of the current priority
/// list is rooted there and unrooted at every earlier vertex; that vertex is
/// isolated and the branch continues with the later vertices followed by the
/// earlier ones. Yields n! leaves on a complete digraph.
///
/// Vertices without a root arc get a zero-weight one on demand; branches and
/// leaves whose weight is zero are pruned. Errors: RootHasInArcs, bad `options.order`,
/// TooLarge past kFactorLeafLimit leaves.
template <Weight W>
Factorization<W> sequential_factor(const Digraph<W>& g, const FactorOptions<W>& options = {}) {
  using Task = detail::FactorTask<W>;
  auto expand = [&options](const Task& task, std::vector<Task>& children, Factorization<W>& out) {
    const auto& order = task.active;
    Digraph<W> current = task.graph;
    std::vector<VertexId> unrooted;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      const VertexId v = order[idx];
      if (idx > 0 && detail::has_unreachable_vertex(current, order)) {
        ++out.pruned;
        break;
      }
      RootSplit<W> split = root_split(detail::ensure_root_arc(current, v), v);
      if (detail::zero_root_weight(split.rooted, {v})) {
        ++out.pruned;
      } else {
        auto levels = task.levels;
        levels.push_back({v});
        detail::emit(options, FactorStep::Kind::Rooted, levels, {v}, unrooted, split.rooted);
        Digraph<W> isolated = isolate_vertex(split.rooted, v);
        detail::emit(options, FactorStep::Kind::Isolated, levels, {v}, unrooted, isolated);

        std::vector<VertexId> next(order.begin() + static_cast<std::ptrdiff_t>(idx) + 1, order.end());
        next.insert(next.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(idx));
        children.push_back(Task{std::move(isolated), std::move(next), std::move(levels)});
      }
      current = std::move(split.unrooted);
      unrooted.push_back(v);
    }
  };
  return detail::run_factor(g, Strategy::Sequential, options, expand);
}

/// Partitioned rooting: every nonempty subset R of the active vertices gives a
/// branch rooted exactly at R; R is isolated and the branch recurses on the
/// rest. Leaves are arborescences, ordered_bell(n) of them on a complete
/// digraph. Same zero handling and errors as sequential_factor.
template <Weight W>
Factorization<W> partitioned_factor(const Digraph<W>& g, const FactorOptions<W>& options = {}) {
  using Task = detail::FactorTask<W>;
  auto expand = [&options](const Task& task, std::vector<Task>& children, Factorization<W>& out) {
    const auto& active = task.active;
    const std::size_t m = active.size();
    if (m >= 63) throw Error(ErrorCode::TooLarge, "too many active vertices");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<VertexId> rooted, rest;
      for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? rooted : rest).push_back(active[i]);

      Digraph<W> h = task.graph;
      for (VertexId v : rooted) h = root_split(detail::ensure_root_arc(h, v), v).rooted;
      if (detail::zero_root_weight(h, rooted)) {
        ++out.pruned;
        continue;
      }
      for (VertexId w : rest) {
        for (const auto& a : h.in_arcs(w)) {
          if (a.source == kRoot) h = h.remove_arc(a.id);
        }
      }
      auto levels = task.levels;
      levels.push_back(rooted);
      detail::emit(options, FactorStep::Kind::Rooted, levels, rooted, rest, h);
      for (VertexId v : rooted) h = isolate_vertex(h, v);
      detail::emit(options, FactorStep::Kind::Isolated, levels, rooted, rest, h);
      children.push_back(Task{std::move(h), std::move(rest), std::move(levels)});
    }
  };
  return detail::run_factor(g, Strategy::Partitioned, options, expand);
}

template <Weight W>
Factorization<W> factor(const Digraph<W>& g, Strategy strategy, const FactorOptions<W>& options = {}) {
  return strategy == Strategy::Sequential ? sequential_factor(g, options) : partitioned_factor(g, options);
}

/// Factors joined by "·", sums parenthesized: "u11·(u12 + u22)·u33".
template <Weight W>
std::string render_term(const FactorTerm<W>& term) {
  std::string out;
  for (std::size_t i = 0; i < term.factors.size(); ++i) {
    if (i > 0) out += "\xC2\xB7";
    std::string f = WeightTraits<W>::to_string(term.factors[i]);
    if constexpr (std::same_as<W, Expr>) {
      if (term.factors[i].kind() == Expr::Kind::Sum) f = "(" + f + ")";
    }
    out += f;
  }
  return out;
}

}  // namespace arbor
