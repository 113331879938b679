#pragma once

#include <concepts>
#include <span>
#include <string>
#include <vector>

#include "arbor/expr.hpp"
#include "arbor/rational.hpp"

namespace arbor {

/// Per-type hooks for arc weights. A weight only needs commutative + and *,
/// plus the handful of helpers below.
template <class W>
struct WeightTraits;

template <>
struct WeightTraits<double> {
  static constexpr bool symbolic = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double w) { return w == 0.0; }
  static double normalize(double w) { return w; }
  static std::string to_string(double w);
};

template <>
struct WeightTraits<Rational> {
  static constexpr bool symbolic = false;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& w) { return w == 0; }
  static Rational normalize(const Rational& w) { return w; }
  static std::string to_string(const Rational& w) { return arbor::to_string(w); }
};

template <>
struct WeightTraits<Expr> {
  static constexpr bool symbolic = true;
  static Expr zero() { return Expr(); }
  static Expr one() { return Expr(Rational(1)); }
  static bool is_zero(const Expr& w) { return w.is_zero(); }
  /// Canonical polynomial, so sums compare structurally.
  static Expr normalize(const Expr& w) { return canonical_polynomial(w); }
  static std::string to_string(const Expr& w) { return arbor::to_string(w); }
};

template <class W>
concept Weight = std::copyable<W> && requires(const W& a, const W& b) {
  { a + b } -> std::convertible_to<W>;
  { a * b } -> std::convertible_to<W>;
  { WeightTraits<W>::zero() } -> std::convertible_to<W>;
  { WeightTraits<W>::one() } -> std::convertible_to<W>;
  { WeightTraits<W>::is_zero(a) } -> std::convertible_to<bool>;
  { WeightTraits<W>::to_string(a) } -> std::convertible_to<std::string>;
};

/// Sum of many weights; symbolic sums are built in one flattening pass.
template <Weight W>
W sum_all(std::vector<W> values) {
  if constexpr (std::same_as<W, Expr>) {
    return Expr::sum_of(std::move(values));
  } else {
    W acc = WeightTraits<W>::zero();
    for (const auto& v : values) acc = acc + v;
    return acc;
  }
}

template <Weight W>
W product_all(std::vector<W> values) {
  if constexpr (std::same_as<W, Expr>) {
    return Expr::product_of(std::move(values));
  } else {
    W acc = WeightTraits<W>::one();
    for (const auto& v : values) acc = acc * v;
    return acc;
  }
}

/// Shortest round-trip decimal rendering ("16", "0.1", "-2.5e-07").
std::string format_number(double value);

}  // namespace arbor
