#include <random>

#include "doctest.h"

#include "arbor/digraph.hpp"
#include "arbor/matrix.hpp"
#include "arbor/random.hpp"
#include "arbor/transforms.hpp"
#include "support/fixtures.hpp"

using namespace arbor;
using arbor::testing::var;

namespace {

template <class F>
void check_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

std::vector<std::string> weights_of(const std::vector<Arc<Expr>>& arcs) {
  std::vector<std::string> out;
  for (const auto& a : arcs) out.push_back(to_string(a.weight));
  return out;
}

}  // namespace

TEST_CASE("add_arc builds a multigraph") {
  Digraph<Expr> empty(2);
  auto [one, id] = empty.add_arc(0, 1, var("w"));
  CHECK(empty.arc_count() == 0);
  REQUIRE(one.arc_count() == 1);
  CHECK(one.arc(id).source == 0);
  CHECK(one.arc(id).target == 1);
  CHECK(one.arc(id).weight == var("w"));

  Digraph<Expr> g(3);
  auto [g1, a] = g.add_arc(1, 2, var("u12"));
  auto [g2, b] = g1.add_arc(1, 2, var("u12"));
  CHECK(a != b);
  CHECK(g2.arc_count() == 2);
  CHECK(g2.out_arcs(1).size() == 2);

  check_error(ErrorCode::SelfLoop, [&] { (void)g.add_arc(1, 1, var("w")); });
  check_error(ErrorCode::VertexOutOfRange, [&] { (void)g.add_arc(0, 3, var("w")); });
  check_error(ErrorCode::UnknownArc, [&] { (void)g.arc(ArcId{42}); });
}

TEST_CASE("arc ids survive copies and removals") {
  auto [g, a] = Digraph<double>(3).add_arc(0, 1, 1.0);
  auto [h, b] = g.add_arc(1, 2, 2.0);
  auto copy = h;
  CHECK(copy.arc(a).weight == 1.0);
  auto removed = copy.remove_arc(a);
  CHECK(removed.find_arc(a) == nullptr);
  CHECK(removed.arc(b).weight == 2.0);
  auto [again, c] = removed.add_arc(0, 1, 3.0);
  CHECK(c != a);
  CHECK(c != b);
}

TEST_CASE("strong connectivity on the example digraphs") {
  auto triangular = matrix_to_digraph(arbor::testing::upper_triangular_matrix());
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = 0; v < 4; ++v) CHECK(triangular.strongly_connected(u, v) == (u == v));
  }
  auto full = matrix_to_digraph(arbor::testing::full_matrix());
  CHECK(full.strongly_connected(1, 2));
  CHECK(full.strongly_connected(2, 3));
  CHECK_FALSE(full.strongly_connected(0, 1));
  CHECK(full.scc().component_count == 2);
  check_error(ErrorCode::VertexOutOfRange, [&] { (void)full.strongly_connected(0, 4); });
}

TEST_CASE("in and out arcs keep insertion order") {
  auto triangular = matrix_to_digraph(arbor::testing::upper_triangular_matrix());
  CHECK(weights_of(triangular.in_arcs(3)) == std::vector<std::string>{"u13", "u23", "u33"});
  CHECK(triangular.in_arcs(0).empty());
  auto moved = combine_all_parallel(move_all_to_root(triangular));
  CHECK(moved.out_arcs(1).empty());
  check_error(ErrorCode::VertexOutOfRange, [&] { (void)moved.in_arcs(9); });
}

TEST_CASE("rooted and isolated predicates") {
  auto full = matrix_to_digraph(arbor::testing::full_matrix());
  CHECK_FALSE(full.is_rooted_at(1));
  check_error(ErrorCode::RootQuery, [&] { (void)full.is_rooted_at(0); });
  check_error(ErrorCode::RootQuery, [&] { (void)full.is_isolated_at(0); });

  auto single = Digraph<Expr>::from_arcs(2, {{0, 1, var("w")}});
  CHECK(single.is_rooted_at(1));
  CHECK(single.is_isolated_at(1));

  // rooted: one in-arc from 0; isolated additionally needs no out-arcs
  auto g = Digraph<Expr>::from_arcs(3, {{0, 1, var("a")}, {1, 2, var("b")}, {0, 2, var("c")}});
  CHECK(g.is_rooted_at(1));
  CHECK_FALSE(g.is_isolated_at(1));
  CHECK_FALSE(g.is_rooted_at(2));

  auto diagonal = combine_all_parallel(move_all_to_root(matrix_to_digraph(arbor::testing::upper_triangular_matrix())));
  for (VertexId v = 1; v <= 3; ++v) CHECK(diagonal.is_isolated_at(v));
}

TEST_CASE("property: graph queries on random digraphs") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_root_valid_digraph<double>(rng, {}, random_positive_double);
    const std::size_t n = g.vertex_count();
    std::size_t in_total = 0, out_total = 0;
    for (VertexId v = 0; v < n; ++v) {
      in_total += g.in_arcs(v).size();
      out_total += g.out_arcs(v).size();
    }
    CHECK(in_total == g.arc_count());
    CHECK(out_total == g.arc_count());

    auto scc = g.scc();
    for (VertexId u = 0; u < n; ++u) {
      if (u != kRoot) CHECK_FALSE(g.strongly_connected(kRoot, u));
      for (VertexId v = 0; v < n; ++v) {
        CHECK(g.strongly_connected(u, v) == g.strongly_connected(v, u));
        CHECK(g.strongly_connected(u, v) == scc.same_component(u, v));
        for (VertexId w = 0; w < n; ++w) {
          if (g.strongly_connected(u, v) && g.strongly_connected(v, w)) CHECK(g.strongly_connected(u, w));
        }
      }
      if (u != kRoot && g.is_isolated_at(u)) CHECK(g.is_rooted_at(u));
    }
  }
}

TEST_CASE("scc agrees with a reachability closure") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    RandomGraphOptions options;
    options.arc_probability = 0.3;
    auto g = random_root_valid_digraph<double>(rng, options, random_positive_double);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (VertexId v = 0; v < n; ++v) reach[v][v] = true;
    for (const auto& a : g.arcs()) reach[a.source][a.target] = true;
    for (VertexId k = 0; k < n; ++k)
      for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v) CHECK(g.strongly_connected(u, v) == (reach[u][v] && reach[v][u]));
  }
}
