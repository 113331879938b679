#include "arbor/io.hpp"

#include <fstream>
#include <sstream>

namespace arbor {

Expr weight_from_json(const nlohmann::json& j) {
  if (j.is_number_integer() || j.is_number_unsigned() || j.is_number_float()) return Expr(parse_rational(j.dump()));
  if (j.is_string()) return parse_expr(j.get<std::string>());
  throw Error(ErrorCode::Parse, "weight must be a number or an expression string, got " + j.dump());
}

Matrix<Expr> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array()) {
    throw Error(ErrorCode::Parse, "matrix JSON needs an \"entries\" array");
  }
  std::vector<std::vector<Expr>> rows;
  for (const auto& row : j.at("entries")) {
    if (!row.is_array()) throw Error(ErrorCode::Parse, "matrix rows must be arrays");
    std::vector<Expr> r;
    for (const auto& e : row) r.push_back(weight_from_json(e));
    rows.push_back(std::move(r));
  }
  if (j.contains("n")) {
    if (!j.at("n").is_number_unsigned() && !j.at("n").is_number_integer()) {
      throw Error(ErrorCode::Parse, "\"n\" must be an integer");
    }
    if (j.at("n").get<long long>() != static_cast<long long>(rows.size())) {
      throw Error(ErrorCode::NotSquare, "\"n\" is " + j.at("n").dump() + " but there are " +
                                            std::to_string(rows.size()) + " rows");
    }
  }
  return Matrix<Expr>::from_rows(rows);
}

nlohmann::json matrix_to_json(const Matrix<Expr>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return {{"n", m.size()}, {"entries", rows}};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Matrix<Expr> matrix_from_csv(std::string_view text) {
  std::vector<std::vector<Expr>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<Expr> row;
    while (true) {
      auto comma = line.find(',');
      std::string_view cell = trim(line.substr(0, comma));
      try {
        row.emplace_back(parse_rational(cell));
      } catch (const Error&) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": '" + std::string(cell) + "' is not a number");
      }
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  return Matrix<Expr>::from_rows(rows);
}

bool is_numeric(const Matrix<Expr>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!canonical_polynomial(m(i, j)).is_constant()) return false;
    }
  }
  return true;
}

bool is_numeric(const Digraph<Expr>& g) {
  for (const auto& a : g.arcs()) {
    if (!canonical_polynomial(a.weight).is_constant()) return false;
  }
  return true;
}

namespace {

double numeric_value(const Expr& e) {
  Expr c = canonical_polynomial(e);
  if (!c.is_constant()) throw Error(ErrorCode::NonNumericWeight, "'" + to_string(e) + "' is not a number");
  return c.value().convert_to<double>();
}

}  // namespace

Matrix<double> to_numeric(const Matrix<Expr>& m) { return m.map(numeric_value); }

Digraph<double> to_numeric(const Digraph<Expr>& g) { return g.map_weights(numeric_value); }

Digraph<Expr> digraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertex_count") || !j.contains("arcs")) {
    throw Error(ErrorCode::Parse, "digraph JSON needs \"vertex_count\" and \"arcs\"");
  }
  std::vector<std::tuple<VertexId, VertexId, Expr>> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_object() || !a.contains("source") || !a.contains("target") || !a.contains("weight")) {
      throw Error(ErrorCode::Parse, "arc needs \"source\", \"target\" and \"weight\": " + a.dump());
    }
    arcs.emplace_back(a.at("source").get<VertexId>(), a.at("target").get<VertexId>(), weight_from_json(a.at("weight")));
  }
  return Digraph<Expr>::from_arcs(j.at("vertex_count").get<std::size_t>(), arcs);
}

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InputDocument load_document(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  InputDocument doc;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
    }
    try {
      if (j.contains("entries")) {
        doc.matrix = matrix_from_json(j);
      } else {
        doc.graph = digraph_from_json(j);
        doc.numeric = is_numeric(doc.graph);
        return doc;
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
    }
  } else {
    doc.matrix = matrix_from_csv(text);
  }
  doc.numeric = is_numeric(*doc.matrix);
  doc.graph = matrix_to_digraph(*doc.matrix);
  return doc;
}

}  // namespace arbor
