#pragma once

#include <map>
#include <utility>
#include <vector>

#include "arbor/digraph.hpp"

namespace arbor {

/// Moves the source of `arc` from a to `new_source` c, keeping its target b,
/// weight and id. Legal only when a and b are not strongly connected in `g`
/// and c and b are not strongly connected in the result; under those
/// conditions the arborescence sum at any root is unchanged.
///
/// Errors: UnknownArc, VertexOutOfRange, SelfLoop (c == b),
/// PreconditionSourceTarget, PreconditionNewSourceTarget.
template <Weight W>
Digraph<W> move_arc(const Digraph<W>& g, ArcId arc, VertexId new_source) {
  const Arc<W>& e = g.arc(arc);
  g.check_vertex(new_source);
  if (new_source == e.target) {
    throw Error(ErrorCode::SelfLoop, "cannot move " + to_string(arc) + " onto its own target " +
                                         std::to_string(e.target));
  }
  if (g.strongly_connected(e.source, e.target)) {
    throw Error(ErrorCode::PreconditionSourceTarget,
                "source " + std::to_string(e.source) + " and target " + std::to_string(e.target) +
                    " are strongly connected");
  }
  if (new_source == e.source) return g;

  // The second condition is a property of the moved graph, so test the candidate.
  Digraph<W> moved = g.rewire_source(arc, new_source);
  if (moved.strongly_connected(new_source, e.target)) {
    throw Error(ErrorCode::PreconditionNewSourceTarget,
                "new source " + std::to_string(new_source) + " and target " + std::to_string(e.target) +
                    " would be strongly connected");
  }
  return moved;
}

/// Replaces two parallel arcs by one fresh arc carrying w(arc1) + w(arc2).
/// The merged arc takes arc1's position in the arc list.
///
/// Errors: UnknownArc, NotParallel (different endpoints or arc1 == arc2).
template <Weight W>
std::pair<Digraph<W>, ArcId> combine_arcs_with_id(const Digraph<W>& g, ArcId arc1, ArcId arc2) {
  const Arc<W>& e1 = g.arc(arc1);
  const Arc<W>& e2 = g.arc(arc2);
  if (arc1 == arc2) throw Error(ErrorCode::NotParallel, "an arc cannot be combined with itself");
  if (e1.source != e2.source || e1.target != e2.target) {
    throw Error(ErrorCode::NotParallel, to_string(arc1) + " and " + to_string(arc2) + " have different endpoints");
  }
  return g.fuse_arcs(arc1, arc2, e1.weight + e2.weight);
}

template <Weight W>
Digraph<W> combine_arcs(const Digraph<W>& g, ArcId arc1, ArcId arc2) {
  return combine_arcs_with_id(g, arc1, arc2).first;
}

/// Merges every class of parallel arcs into one arc. Classes are processed in
/// order of their first member and weights are left-folded in arc order.
template <Weight W>
Digraph<W> combine_all_parallel(const Digraph<W>& g) {
  std::map<std::pair<VertexId, VertexId>, std::vector<ArcId>> classes;
  std::vector<std::pair<VertexId, VertexId>> order;
  for (const auto& a : g.arcs()) {
    auto [it, inserted] = classes.try_emplace({a.source, a.target});
    if (inserted) order.push_back({a.source, a.target});
    it->second.push_back(a.id);
  }
  Digraph<W> out = g;
  for (const auto& key : order) {
    const auto& members = classes[key];
    if (members.size() < 2) continue;
    ArcId merged = members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
      std::tie(out, merged) = combine_arcs_with_id(out, merged, members[i]);
    }
  }
  return out;
}

/// Repeatedly moves every arc whose move to the root is legal, until no more
/// moves apply. On a graph without strongly connected pairs this turns every
/// arc into a root arc.
template <Weight W>
Digraph<W> move_all_to_root(const Digraph<W>& g) {
  Digraph<W> out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : std::vector<Arc<W>>(out.arcs().begin(), out.arcs().end())) {
      if (a.source == kRoot || a.target == kRoot) continue;
      if (out.strongly_connected(a.source, a.target)) continue;
      if (out.rewire_source(a.id, kRoot).strongly_connected(kRoot, a.target)) continue;
      out = move_arc(out, a.id, kRoot);
      changed = true;
    }
  }
  return out;
}

}  // namespace arbor
