#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "arbor/rational.hpp"

namespace arbor {

/// Immutable commutative expression over named variables with exact rational
/// constants. Sums and products are kept flattened; constants inside a sum or
/// product are folded into a single child (last in a sum, first in a product).
///
/// Expressions are cheap to copy (shared immutable nodes) and safe to share
/// across threads.
class Expr {
 public:
  enum class Kind { Constant, Variable, Sum, Product };

  /// Constant zero.
  Expr();
  Expr(Rational value);  // NOLINT: implicit so numbers mix with expressions
  Expr(int value) : Expr(Rational(value)) {}  // NOLINT

  static Expr constant(Rational value) { return Expr(std::move(value)); }
  static Expr variable(std::string name);

  /// Flattening constructors. Nested sums (products) are spliced in, constants
  /// folded, identities absorbed; a single remaining child is returned as is.
  static Expr sum_of(std::vector<Expr> terms);
  static Expr product_of(std::vector<Expr> factors);

  Kind kind() const noexcept;
  bool is_constant() const noexcept { return kind() == Kind::Constant; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only valid for constants.
  const Rational& value() const;
  /// Only valid for variables.
  const std::string& name() const;
  /// Empty for constants and variables.
  std::span<const Expr> children() const noexcept;

  /// Structural equality. Use canonical_polynomial (or Polynomial) to decide
  /// algebraic equality.
  friend bool operator==(const Expr& a, const Expr& b);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr operator-(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& other) { return *this = *this + other; }
  Expr& operator*=(const Expr& other) { return *this = *this * other; }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Expr expr_add(const Expr& a, const Expr& b) { return a + b; }
inline Expr expr_mul(const Expr& a, const Expr& b) { return a * b; }

/// Name of the matrix-digraph weight u_ij: "u12", or "u1_12" once either index
/// needs more than one digit.
std::string variable_name(std::size_t i, std::size_t j);

/// Sorted multiset of variable names.
using Monomial = std::vector<std::string>;

/// Fully expanded polynomial: monomial -> nonzero rational coefficient.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Monomial& m, const Rational& coefficient);
  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial multiply(const Polynomial& a, const Polynomial& b, std::size_t limit);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Expr to_expr() const;

 private:
  Terms terms_;
};

inline constexpr std::size_t kExpansionLimit = 1'000'000;

/// Throws ExpansionTooLarge when an intermediate result exceeds `limit` monomials.
Polynomial expand(const Expr& e, std::size_t limit = kExpansionLimit);

/// Expanded, sorted, like terms merged. Idempotent.
Expr canonical_polynomial(const Expr& e);

/// True iff both sides expand to the same polynomial.
bool algebraically_equal(const Expr& a, const Expr& b);

/// Throws UnboundVariable for variables missing from the assignment.
double eval(const Expr& e, const std::map<std::string, double>& assignment);
Rational eval(const Expr& e, const std::map<std::string, Rational>& assignment);

/// Variable names in first-occurrence order.
std::vector<std::string> variables(const Expr& e);

/// Products joined by "·", sums parenthesized inside products, e.g.
/// "u11·(u12 + u22)".
std::string to_string(const Expr& e);

/// Inverse of to_string. Also accepts '*' for products, unary minus,
/// fractions ("3/4") and decimals.
Expr parse_expr(std::string_view text);

nlohmann::json to_json(const Expr& e);
Expr expr_from_json(const nlohmann::json& j);

}  // namespace arbor
