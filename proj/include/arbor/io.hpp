#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "arbor/digraph.hpp"
#include "arbor/matrix.hpp"

namespace arbor {

/// One weight from JSON: numbers become exact constants (0.1 is 1/10),
/// strings are parsed as expressions.
Expr weight_from_json(const nlohmann::json& j);

/// {"n": k, "entries": [[...], ...]}; "n" is optional but must agree.
Matrix<Expr> matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix<Expr>& m);

/// Comma-separated numeric rows; blank lines and '#' comments are skipped.
Matrix<Expr> matrix_from_csv(std::string_view text);

/// True iff every entry is a constant.
bool is_numeric(const Matrix<Expr>& m);
bool is_numeric(const Digraph<Expr>& g);

/// Throws NonNumericWeight on any non-constant entry.
Matrix<double> to_numeric(const Matrix<Expr>& m);
Digraph<double> to_numeric(const Digraph<Expr>& g);

/// {"vertex_count": n + 1, "arcs": [{"source": s, "target": t, "weight": w}]}
Digraph<Expr> digraph_from_json(const nlohmann::json& j);

template <Weight W>
nlohmann::json digraph_to_json(const Digraph<W>& g) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& a : g.arcs()) {
    nlohmann::json w;
    if constexpr (std::same_as<W, double>) w = a.weight;
    else w = WeightTraits<W>::to_string(a.weight);
    arcs.push_back({{"source", a.source}, {"target", a.target}, {"weight", w}});
  }
  return {{"vertex_count", g.vertex_count()}, {"arcs", arcs}};
}

std::string dot_escape(std::string_view text);

/// Graphviz rendering: one edge statement per arc labelled with its weight;
/// the root is drawn as a double circle.
template <Weight W>
std::string to_dot(const Digraph<W>& g, std::string_view name = "G") {
  std::string out = "digraph \"" + dot_escape(name) + "\" {\n  node [shape=circle];\n";
  out += "  0 [shape=doublecircle];\n";
  for (VertexId v = 1; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& a : g.arcs()) {
    out += "  " + std::to_string(a.source) + " -> " + std::to_string(a.target) + " [label=\"" +
           dot_escape(WeightTraits<W>::to_string(a.weight)) + "\"];\n";
  }
  out += "}\n";
  return out;
}

/// A matrix or digraph file. JSON with "entries" is a matrix, JSON with
/// "arcs" a digraph, anything else is read as numeric CSV.
struct InputDocument {
  std::optional<Matrix<Expr>> matrix;
  Digraph<Expr> graph{1};
  bool numeric = false;
};

/// Throws Parse (bad syntax), NotSquare, or std::runtime_error for I/O.
InputDocument load_document(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace arbor
