#include <limits>

#include "arbor/digraph.hpp"

namespace arbor {

SccPartition strongly_connected_components(std::size_t vertex_count,
                                           std::span<const std::pair<VertexId, VertexId>> edges) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<VertexId>> adjacency(vertex_count);
  for (const auto& [s, t] : edges) adjacency.at(s).push_back(t);

  SccPartition out;
  out.component_of.assign(vertex_count, kUnvisited);

  std::vector<std::size_t> index(vertex_count, kUnvisited);
  std::vector<std::size_t> lowlink(vertex_count, 0);
  std::vector<bool> on_stack(vertex_count, false);
  std::vector<VertexId> stack;
  std::size_t next_index = 0;

  // (vertex, next neighbour position) frames replace recursion
  std::vector<std::pair<VertexId, std::size_t>> frames;

  for (VertexId start = 0; start < vertex_count; ++start) {
    if (index[start] != kUnvisited) continue;
    frames.emplace_back(start, 0);
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adjacency[v].size()) {
        VertexId w = adjacency[v][pos++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      VertexId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        VertexId parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component_of[w] = out.component_count;
        } while (w != done);
        ++out.component_count;
      }
    }
  }
  return out;
}

}  // namespace arbor
