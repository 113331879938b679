#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arbor/error.hpp"
#include "arbor/weight.hpp"

namespace arbor {

/// Dense vertex index; a digraph with n + 1 vertices uses {0, ..., n}.
using VertexId = std::size_t;

/// The distinguished root of a matrix digraph.
inline constexpr VertexId kRoot = 0;

/// Opaque arc identifier, unique within one digraph and preserved by copies.
enum class ArcId : std::uint64_t {};

inline std::string to_string(ArcId id) { return "#" + std::to_string(static_cast<std::uint64_t>(id)); }

template <Weight W>
struct Arc {
  ArcId id;
  VertexId source;
  VertexId target;
  W weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Strongly connected components: two vertices share an index iff each is
/// reachable from the other.
struct SccPartition {
  std::vector<std::size_t> component_of;
  std::size_t component_count = 0;

  bool same_component(VertexId u, VertexId v) const { return component_of.at(u) == component_of.at(v); }
};

/// Tarjan's algorithm (iterative). `edges` are (source, target) pairs.
SccPartition strongly_connected_components(std::size_t vertex_count,
                                           std::span<const std::pair<VertexId, VertexId>> edges);

/// Weighted multidigraph value. Parallel arcs are kept distinct, self-loops are
/// rejected. Every "mutation" returns a new digraph; arcs keep insertion order.
template <Weight W>
class Digraph {
 public:
  using weight_type = W;
  using arc_type = Arc<W>;

  explicit Digraph(std::size_t vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count == 0) throw Error(ErrorCode::VertexOutOfRange, "a digraph needs at least one vertex");
  }

  /// Convenience constructor for literal graphs: (source, target, weight) triples.
  static Digraph from_arcs(std::size_t vertex_count, const std::vector<std::tuple<VertexId, VertexId, W>>& arcs) {
    Digraph g(vertex_count);
    for (const auto& [s, t, w] : arcs) g.push_arc(s, t, w);
    return g;
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::span<const Arc<W>> arcs() const noexcept { return arcs_; }

  const Arc<W>* find_arc(ArcId id) const noexcept {
    auto it = std::find_if(arcs_.begin(), arcs_.end(), [id](const Arc<W>& a) { return a.id == id; });
    return it == arcs_.end() ? nullptr : &*it;
  }

  const Arc<W>& arc(ArcId id) const {
    if (const auto* a = find_arc(id)) return *a;
    throw Error(ErrorCode::UnknownArc, to_string(id));
  }

  std::pair<Digraph, ArcId> add_arc(VertexId source, VertexId target, W weight) const {
    Digraph g = *this;
    ArcId id = g.push_arc(source, target, std::move(weight));
    return {std::move(g), id};
  }

  Digraph remove_arc(ArcId id) const {
    Digraph g = *this;
    g.arcs_.erase(g.arcs_.begin() + g.index_of(id));
    return g;
  }

  /// Same arc (id, target, weight) with a different source. No sum-preservation
  /// check happens here; see move_arc for the guarded version.
  Digraph rewire_source(ArcId id, VertexId new_source) const {
    check_vertex(new_source);
    Digraph g = *this;
    auto& a = g.arcs_[g.index_of(id)];
    if (a.target == new_source) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(new_source));
    a.source = new_source;
    return g;
  }

  /// Replaces `first` and `second` by one fresh arc with `weight`, placed where
  /// `first` was. Endpoints are taken from `first`.
  std::pair<Digraph, ArcId> fuse_arcs(ArcId first, ArcId second, W weight) const {
    Digraph g = *this;
    std::size_t i = g.index_of(first);
    std::size_t j = g.index_of(second);
    ArcId fresh = g.mint_id();
    g.arcs_[i] = Arc<W>{fresh, g.arcs_[i].source, g.arcs_[i].target, std::move(weight)};
    g.arcs_.erase(g.arcs_.begin() + j);
    return {std::move(g), fresh};
  }

  std::vector<Arc<W>> in_arcs(VertexId v) const {
    check_vertex(v);
    std::vector<Arc<W>> out;
    for (const auto& a : arcs_) {
      if (a.target == v) out.push_back(a);
    }
    return out;
  }

  std::vector<Arc<W>> out_arcs(VertexId v) const {
    check_vertex(v);
    std::vector<Arc<W>> out;
    for (const auto& a : arcs_) {
      if (a.source == v) out.push_back(a);
    }
    return out;
  }

  std::size_t in_degree(VertexId v) const {
    check_vertex(v);
    return static_cast<std::size_t>(std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc<W>& a) { return a.target == v; }));
  }

  SccPartition scc() const {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(arcs_.size());
    for (const auto& a : arcs_) edges.emplace_back(a.source, a.target);
    return strongly_connected_components(vertex_count_, edges);
  }

  bool strongly_connected(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return u == v || scc().same_component(u, v);
  }

  /// Exactly one in-arc to v, and it comes from the root.
  bool is_rooted_at(VertexId v) const {
    check_non_root(v);
    std::size_t count = 0;
    bool from_root = false;
    for (const auto& a : arcs_) {
      if (a.target == v) {
        ++count;
        from_root = a.source == kRoot;
      }
    }
    return count == 1 && from_root;
  }

  /// Rooted at v and without out-arcs.
  bool is_isolated_at(VertexId v) const {
    if (!is_rooted_at(v)) return false;
    return std::none_of(arcs_.begin(), arcs_.end(), [v](const Arc<W>& a) { return a.source == v; });
  }

  /// No in-arcs to vertex 0.
  bool is_root_valid() const {
    return std::none_of(arcs_.begin(), arcs_.end(), [](const Arc<W>& a) { return a.target == kRoot; });
  }

  /// Same structure and ids with weights converted by `f`.
  template <class F>
  auto map_weights(F&& f) const -> Digraph<std::decay_t<decltype(f(std::declval<const W&>()))>> {
    using Out = std::decay_t<decltype(f(std::declval<const W&>()))>;
    Digraph<Out> g(vertex_count_);
    for (const auto& a : arcs_) g.arcs_.push_back(Arc<Out>{a.id, a.source, a.target, f(a.weight)});
    g.next_id_ = next_id_;
    return g;
  }

  /// Structural equality: vertex count and the ordered arc list (ids included).
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arcs_ == b.arcs_;
  }

  void check_vertex(VertexId v) const {
    if (v >= vertex_count_) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in {0.." + std::to_string(vertex_count_ - 1) + "}");
    }
  }

  void check_non_root(VertexId v) const {
    if (v == kRoot) throw Error(ErrorCode::RootQuery, "query is undefined for the root vertex");
    check_vertex(v);
  }

 private:
  template <Weight>
  friend class Digraph;

  ArcId mint_id() { return ArcId{next_id_++}; }

  ArcId push_arc(VertexId source, VertexId target, W weight) {
    check_vertex(source);
    check_vertex(target);
    if (source == target) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(source));
    ArcId id = mint_id();
    arcs_.push_back(Arc<W>{id, source, target, std::move(weight)});
    return id;
  }

  std::size_t index_of(ArcId id) const {
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      if (arcs_[i].id == id) return i;
    }
    throw Error(ErrorCode::UnknownArc, to_string(id));
  }

  std::size_t vertex_count_;
  std::vector<Arc<W>> arcs_;
  std::uint64_t next_id_ = 0;
};

}  // namespace arbor
