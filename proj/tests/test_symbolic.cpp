#include <random>

#include "doctest.h"

#include "arbor/error.hpp"
#include "arbor/expr.hpp"
#include "support/fixtures.hpp"

using namespace arbor;
using arbor::testing::ex;
using arbor::testing::var;

TEST_CASE("sums and products flatten and absorb identities") {
  Expr s = var("u12") + var("u22");
  REQUIRE(s.kind() == Expr::Kind::Sum);
  CHECK(s.children().size() == 2);
  CHECK(to_string(s) == "u12 + u22");

  CHECK(var("x") * Expr(1) == var("x"));
  CHECK(var("x") + Expr(0) == var("x"));
  CHECK((var("x") * Expr(0)).is_zero());

  Expr nested = (var("u13") + var("u23")) + var("u33");
  REQUIRE(nested.kind() == Expr::Kind::Sum);
  CHECK(nested.children().size() == 3);
  CHECK(nested == Expr::sum_of({var("u13"), var("u23"), var("u33")}));

  Expr p = var("a") * (var("b") * var("c"));
  REQUIRE(p.kind() == Expr::Kind::Product);
  CHECK(p.children().size() == 3);
}

TEST_CASE("constants fold to one child") {
  Expr s = Expr(2) + var("x") + Expr(3);
  CHECK(to_string(s) == "x + 5");
  Expr p = Expr(2) * var("x") * Expr(Rational(1, 2));
  CHECK(p == var("x"));
  CHECK(to_string(Expr(-3) * var("x")) == "-3·x");
  CHECK(to_string(-var("x")) == "-x");
  CHECK(-(-var("x")) == var("x"));
}

TEST_CASE("canonical polynomial expands and merges") {
  CHECK(canonical_polynomial(ex("u11·(u12 + u22)")) == ex("u11·u12 + u11·u22"));
  CHECK(canonical_polynomial(var("x") + var("x")) == ex("2·x"));
  CHECK(canonical_polynomial(ex("x - x")).is_zero());
  CHECK(canonical_polynomial(ex("(a + b)·(a - b)")) == canonical_polynomial(ex("a·a - b·b")));

  Expr e = ex("(u21 + u31)·u22·(u33 + u23) + 3/2");
  Expr c = canonical_polynomial(e);
  CHECK(canonical_polynomial(c) == c);
}

TEST_CASE("expansion guard rail") {
  // (x1 + ... + x10)^7 style blowup with a tiny limit
  std::vector<Expr> terms;
  for (int i = 0; i < 10; ++i) terms.push_back(var("x" + std::to_string(i)));
  Expr sum = Expr::sum_of(terms);
  Expr power = Expr::product_of({sum, sum, sum});
  CHECK_NOTHROW(expand(power));
  try {
    (void)expand(power, 50);
    FAIL("expected ExpansionTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExpansionTooLarge);
    CHECK(e.is_guard_rail());
  }
}

TEST_CASE("evaluation") {
  CHECK(eval(Expr(Rational(7, 3)), std::map<std::string, Rational>{}) == Rational(7, 3));
  // 1·(2+3)·(4+5+6)
  std::map<std::string, double> u{{"u11", 1}, {"u12", 2}, {"u22", 3}, {"u13", 4}, {"u23", 5}, {"u33", 6}};
  CHECK(eval(ex("u11·(u12 + u22)·(u13 + u23 + u33)"), u) == 75.0);

  try {
    (void)eval(var("missing"), std::map<std::string, double>{});
    FAIL("expected UnboundVariable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundVariable);
  }
}

TEST_CASE("published factorization evaluates to 16 at all ones") {
  Expr rhs = Expr::sum_of(arbor::testing::published_sequential_terms());
  auto ones = arbor::testing::uniform_assignment(3, 1);
  // 6 + 2 + 4 + 1 + 2 + 1
  CHECK(eval(rhs, ones) == 16);
  const auto terms = arbor::testing::published_sequential_terms();
  const int expected[] = {6, 2, 4, 1, 2, 1};
  for (std::size_t i = 0; i < terms.size(); ++i) CHECK(eval(terms[i], ones) == expected[i]);
}

TEST_CASE("variable names stay unambiguous past nine") {
  CHECK(variable_name(1, 2) == "u12");
  CHECK(variable_name(1, 12) == "u1_12");
  CHECK(variable_name(10, 1) == "u10_1");
  CHECK(parse_expr(variable_name(11, 3)) == var("u11_3"));
}

TEST_CASE("parser accepts the rendered grammar") {
  CHECK(parse_expr("u11·(u12 + u22)") == var("u11") * (var("u12") + var("u22")));
  CHECK(parse_expr("u11*(u12+u22)") == var("u11") * (var("u12") + var("u22")));
  CHECK(parse_expr("a - 2·b") == var("a") + Expr(-2) * var("b"));
  CHECK(parse_expr("0.125") == Expr(Rational(1, 8)));
  CHECK(parse_expr("-3/4") == Expr(Rational(-3, 4)));
  CHECK(parse_expr("1e2") == Expr(100));
  for (const char* bad : {"", "u11 +", "(a", "a b", "3/", "#"}) {
    try {
      (void)parse_expr(bad);
      FAIL("expected a parse error for '" << bad << "'");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

namespace {

Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 3);
  std::uniform_int_distribution<int> small(-3, 3), var_index(1, 3), width(2, 3);
  switch (pick(rng)) {
    case 0: return Expr(Rational(small(rng), std::uniform_int_distribution<int>(1, 3)(rng)));
    case 1: return Expr::variable(variable_name(var_index(rng), var_index(rng)));
    case 2: {
      std::vector<Expr> kids;
      for (int i = width(rng); i > 0; --i) kids.push_back(random_expr(rng, depth - 1));
      return Expr::sum_of(kids);
    }
    default: {
      std::vector<Expr> kids;
      for (int i = width(rng); i > 0; --i) kids.push_back(random_expr(rng, depth - 1));
      return Expr::product_of(kids);
    }
  }
}

std::map<std::string, Rational> random_assignment(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  std::map<std::string, Rational> out;
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) out[variable_name(i, j)] = Rational(num(rng), den(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("property: canonical form is commutative, idempotent and value-preserving") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Expr a = random_expr(rng, 3);
    Expr b = random_expr(rng, 3);
    CHECK(canonical_polynomial(a + b) == canonical_polynomial(b + a));
    CHECK(canonical_polynomial(a * b) == canonical_polynomial(b * a));
    Expr c = canonical_polynomial(a);
    CHECK(canonical_polynomial(c) == c);
    for (int s = 0; s < 10; ++s) {
      auto sigma = random_assignment(rng);
      CHECK(eval(c, sigma) == eval(a, sigma));
      CHECK(eval(a + b, sigma) == eval(a, sigma) + eval(b, sigma));
      CHECK(eval(a * b, sigma) == eval(a, sigma) * eval(b, sigma));
    }
  }
}

TEST_CASE("property: text and JSON round-trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Expr e = random_expr(rng, 3);
    CHECK_MESSAGE(parse_expr(to_string(e)) == e, to_string(e));
    CHECK(expr_from_json(to_json(e)) == e);
  }
}
