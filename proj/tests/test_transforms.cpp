#include <random>

#include "doctest.h"

#include "arbor/arborescence.hpp"
#include "arbor/matrix.hpp"
#include "arbor/random.hpp"
#include "arbor/transforms.hpp"
#include "support/fixtures.hpp"

using namespace arbor;
using arbor::testing::ex;
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

template <Weight W>
const Arc<W>& arc_between(const Digraph<W>& g, VertexId s, VertexId t) {
  for (const auto& a : g.arcs()) {
    if (a.source == s && a.target == t) return a;
  }
  FAIL("no arc " << s << " -> " << t);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("moving an arc to the root creates a parallel root arc") {
  auto g = matrix_to_digraph(arbor::testing::upper_triangular_matrix());
  ArcId u12 = arc_between(g, 1, 2).id;
  auto h = move_arc(g, u12, kRoot);
  auto into2 = h.in_arcs(2);
  REQUIRE(into2.size() == 2);
  for (const auto& a : into2) CHECK(a.source == kRoot);
  CHECK(h.arc(u12).source == kRoot);
  CHECK(h.arc(u12).weight == var("u12"));
  CHECK(arborescence_sum(h, kRoot) == arborescence_sum(g, kRoot));

  auto merged = combine_all_parallel(h);
  REQUIRE(merged.in_arcs(2).size() == 1);
  CHECK(canonical_polynomial(merged.in_arcs(2).front().weight) == canonical_polynomial(ex("u12 + u22")));
}

TEST_CASE("move to the current source is the identity") {
  auto g = matrix_to_digraph(arbor::testing::upper_triangular_matrix());
  ArcId u23 = arc_between(g, 2, 3).id;
  CHECK(move_arc(g, u23, 2) == g);
}

TEST_CASE("move preconditions") {
  auto full = matrix_to_digraph(arbor::testing::full_matrix());
  ArcId u21 = arc_between(full, 2, 1).id;
  check_error(ErrorCode::PreconditionSourceTarget, [&] { (void)move_arc(full, u21, 3); });
  check_error(ErrorCode::SelfLoop, [&] { (void)move_arc(full, u21, 1); });
  check_error(ErrorCode::VertexOutOfRange, [&] { (void)move_arc(full, u21, 4); });
  check_error(ErrorCode::UnknownArc, [&] { (void)move_arc(full, ArcId{999}, 0); });

  // 1 -> 2 -> 3: moving (1, 2) to start at 3 would close the cycle 2 -> 3 -> 2.
  // The original graph has 3 and 2 in different components, so the check has
  // to look at the moved graph.
  auto chain = Digraph<double>::from_arcs(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 3.0}});
  ArcId e = arc_between(chain, 1, 2).id;
  CHECK_FALSE(chain.strongly_connected(3, 2));
  check_error(ErrorCode::PreconditionNewSourceTarget, [&] { (void)move_arc(chain, e, 3); });
  CHECK(move_arc(chain, e, kRoot).arc(e).source == kRoot);
}

TEST_CASE("combining parallel arcs") {
  auto g = Digraph<Expr>::from_arcs(3, {{0, 1, var("a")}, {1, 2, var("x")}, {0, 2, var("c")}, {1, 2, var("y")}});
  ArcId x = g.arcs()[1].id, y = g.arcs()[3].id;
  auto [h, merged] = combine_arcs_with_id(g, x, y);
  CHECK(h.arc_count() == 3);
  CHECK(h.arc(merged).weight == ex("x + y"));
  CHECK(h.find_arc(x) == nullptr);
  CHECK(h.find_arc(y) == nullptr);
  CHECK(h.arcs()[1].id == merged);
  for (VertexId r = 0; r < 3; ++r) CHECK(arborescence_sum(h, r) == arborescence_sum(g, r));

  check_error(ErrorCode::NotParallel, [&] { (void)combine_arcs(g, x, g.arcs()[2].id); });
  check_error(ErrorCode::NotParallel, [&] { (void)combine_arcs(g, x, x); });
  check_error(ErrorCode::UnknownArc, [&] { (void)combine_arcs(g, x, ArcId{1234}); });

  auto numeric = Digraph<double>::from_arcs(2, {{0, 1, 1.5}, {0, 1, 2.5}, {0, 1, -1.0}});
  auto folded = combine_all_parallel(numeric);
  REQUIRE(folded.arc_count() == 1);
  CHECK(folded.arcs().front().weight == 3.0);
}

TEST_CASE("triangular example diagonalizes") {
  auto g = matrix_to_digraph(arbor::testing::upper_triangular_matrix());
  auto diagonal = combine_all_parallel(move_all_to_root(g));
  CHECK(diagonal.arc_count() == 3);
  CHECK(canonical_polynomial(diagonal.in_arcs(1).front().weight) == canonical_polynomial(ex("u11")));
  CHECK(canonical_polynomial(diagonal.in_arcs(2).front().weight) == canonical_polynomial(ex("u12 + u22")));
  CHECK(canonical_polynomial(diagonal.in_arcs(3).front().weight) == canonical_polynomial(ex("u13 + u23 + u33")));
  CHECK(combine_all_parallel(diagonal) == diagonal);
}

TEST_CASE("property: legal moves preserve the arborescence sum at every root") {
  Rng rng(21);
  std::size_t legal = 0, refused = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_root_valid_digraph<Rational>(rng, {}, random_positive_rational);
    for (const auto& a : std::vector<Arc<Rational>>(g.arcs().begin(), g.arcs().end())) {
      for (VertexId c = 0; c < g.vertex_count(); ++c) {
        if (c == a.target) continue;
        Digraph<Rational> h = g;
        try {
          h = move_arc(g, a.id, c);
        } catch (const Error& e) {
          CHECK((e.code() == ErrorCode::PreconditionSourceTarget || e.code() == ErrorCode::PreconditionNewSourceTarget));
          ++refused;
          continue;
        }
        ++legal;
        CHECK(h.arc_count() == g.arc_count());
        for (VertexId r = 0; r < g.vertex_count(); ++r) {
          CHECK(arborescence_sum(h, r) == arborescence_sum(g, r));
          // the moved arc is used by exactly as many arborescences as before
          CHECK(count_arborescences_containing(h, r, a.id) == count_arborescences_containing(g, r, a.id));
          CHECK(count_arborescences(h, r) == count_arborescences(g, r));
        }
      }
    }
  }
  CHECK(legal > 100);
  CHECK(refused > 10);
}

TEST_CASE("property: merging parallel arcs is idempotent and sum preserving") {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    RandomGraphOptions options;
    options.parallel_probability = 0.5;
    auto g = random_root_valid_digraph<Rational>(rng, options, random_positive_rational);
    auto once = combine_all_parallel(g);
    CHECK(combine_all_parallel(once) == once);
    for (VertexId r = 0; r < g.vertex_count(); ++r) CHECK(arborescence_sum(once, r) == arborescence_sum(g, r));
    for (std::size_t i = 0; i < once.arc_count(); ++i) {
      for (std::size_t j = i + 1; j < once.arc_count(); ++j) {
        CHECK_FALSE((once.arcs()[i].source == once.arcs()[j].source && once.arcs()[i].target == once.arcs()[j].target));
      }
    }
  }
}

TEST_CASE("property: symbolic moves keep the polynomial") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int counter = 0;
    auto g = random_root_valid_digraph<Expr>(rng, {}, [&](Rng&) { return var("w" + std::to_string(counter++)); });
    auto h = combine_all_parallel(move_all_to_root(g));
    CHECK(arborescence_sum(h, kRoot) == arborescence_sum(g, kRoot));
  }
}
