#include "arbor/expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "arbor/error.hpp"

namespace arbor {

struct Expr::Node {
  Kind kind;
  Rational value;             // Constant
  std::string name;           // Variable
  std::vector<Expr> children; // Sum, Product
};

Expr::Expr() : node_(std::make_shared<const Node>(Node{Kind::Constant, Rational(0), {}, {}})) {}

Expr::Expr(Rational value)
    : node_(std::make_shared<const Node>(Node{Kind::Constant, std::move(value), {}, {}})) {}

Expr Expr::variable(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Kind::Variable, Rational(0), std::move(name), {}}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

bool Expr::is_zero() const noexcept { return node_->kind == Kind::Constant && node_->value == 0; }

bool Expr::is_one() const noexcept { return node_->kind == Kind::Constant && node_->value == 1; }

const Rational& Expr::value() const { return node_->value; }

const std::string& Expr::name() const { return node_->name; }

std::span<const Expr> Expr::children() const noexcept { return node_->children; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Constant: return a.value() == b.value();
    case Expr::Kind::Variable: return a.name() == b.name();
    default: break;
  }
  auto ca = a.children();
  auto cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Expr Expr::sum_of(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  flat.reserve(terms.size());
  Rational constant = 0;
  for (auto& t : terms) {
    switch (t.kind()) {
      case Kind::Constant: constant += t.value(); break;
      case Kind::Sum:
        for (const auto& c : t.children()) {
          // children of a flattened sum are never sums; constants fold
          if (c.is_constant()) constant += c.value();
          else flat.push_back(c);
        }
        break;
      default: flat.push_back(std::move(t)); break;
    }
  }
  if (constant != 0) flat.emplace_back(constant);
  if (flat.empty()) return Expr();
  if (flat.size() == 1) return flat.front();
  return Expr(std::make_shared<const Node>(Node{Kind::Sum, Rational(0), {}, std::move(flat)}));
}

Expr Expr::product_of(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  flat.reserve(factors.size() + 1);
  Rational constant = 1;
  auto take = [&](const Expr& f) {
    if (f.is_constant()) constant *= f.value();
    else flat.push_back(f);
  };
  for (const auto& f : factors) {
    if (f.kind() == Kind::Product) {
      for (const auto& c : f.children()) take(c);
    } else {
      take(f);
    }
  }
  if (constant == 0) return Expr();
  if (constant != 1) flat.insert(flat.begin(), Expr(constant));
  if (flat.empty()) return Expr(Rational(1));
  if (flat.size() == 1) return flat.front();
  return Expr(std::make_shared<const Node>(Node{Kind::Product, Rational(0), {}, std::move(flat)}));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum_of({a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product_of({a, b}); }
Expr operator-(const Expr& a) { return Expr::product_of({Expr(Rational(-1)), a}); }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

std::string variable_name(std::size_t i, std::size_t j) {
  if (i < 10 && j < 10) return "u" + std::to_string(i) + std::to_string(j);
  return "u" + std::to_string(i) + "_" + std::to_string(j);
}

// ---------------------------------------------------------------------------
// Polynomial

void Polynomial::add(const Monomial& m, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, std::size_t limit) {
  Polynomial out;
  if (a.size() * b.size() > limit * 4) {
    throw Error(ErrorCode::ExpansionTooLarge, "product of " + std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()) + " monomials");
  }
  Monomial merged;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      merged.clear();
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
      out.add(merged, ca * cb);
    }
    if (out.size() > limit) {
      throw Error(ErrorCode::ExpansionTooLarge, "more than " + std::to_string(limit) + " monomials");
    }
  }
  return out;
}

Expr Polynomial::to_expr() const {
  std::vector<Expr> summands;
  summands.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<Expr> factors;
    factors.reserve(m.size() + 1);
    factors.emplace_back(c);
    for (const auto& v : m) factors.push_back(Expr::variable(v));
    summands.push_back(Expr::product_of(std::move(factors)));
  }
  return Expr::sum_of(std::move(summands));
}

Polynomial expand(const Expr& e, std::size_t limit) {
  Polynomial p;
  switch (e.kind()) {
    case Expr::Kind::Constant: p.add({}, e.value()); break;
    case Expr::Kind::Variable: p.add({e.name()}, Rational(1)); break;
    case Expr::Kind::Sum:
      for (const auto& c : e.children()) {
        p += expand(c, limit);
        if (p.size() > limit) {
          throw Error(ErrorCode::ExpansionTooLarge, "more than " + std::to_string(limit) + " monomials");
        }
      }
      break;
    case Expr::Kind::Product:
      p.add({}, Rational(1));
      for (const auto& c : e.children()) p = multiply(p, expand(c, limit), limit);
      break;
  }
  return p;
}

Expr canonical_polynomial(const Expr& e) { return expand(e).to_expr(); }

bool algebraically_equal(const Expr& a, const Expr& b) { return expand(a) == expand(b); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

template <class T>
T evaluate(const Expr& e, const std::map<std::string, T>& assignment) {
  switch (e.kind()) {
    case Expr::Kind::Constant: return static_cast<T>(e.value());
    case Expr::Kind::Variable: {
      auto it = assignment.find(e.name());
      if (it == assignment.end()) throw Error(ErrorCode::UnboundVariable, e.name());
      return it->second;
    }
    case Expr::Kind::Sum: {
      T acc = 0;
      for (const auto& c : e.children()) acc += evaluate(c, assignment);
      return acc;
    }
    case Expr::Kind::Product: {
      T acc = 1;
      for (const auto& c : e.children()) acc *= evaluate(c, assignment);
      return acc;
    }
  }
  return T(0);
}

}  // namespace

double eval(const Expr& e, const std::map<std::string, double>& assignment) { return evaluate(e, assignment); }

Rational eval(const Expr& e, const std::map<std::string, Rational>& assignment) { return evaluate(e, assignment); }

std::vector<std::string> variables(const Expr& e) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    if (x.kind() == Expr::Kind::Variable) {
      if (seen.insert(x.name()).second) out.push_back(x.name());
    }
    for (const auto& c : x.children()) walk(c);
  };
  walk(e);
  return out;
}

// ---------------------------------------------------------------------------
// Text

namespace {

constexpr std::string_view kDot = "\xC2\xB7";  // U+00B7 MIDDLE DOT

std::string render_factor(const Expr& e) {
  std::string s = to_string(e);
  return e.kind() == Expr::Kind::Sum ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant: return to_string(e.value());
    case Expr::Kind::Variable: return e.name();
    case Expr::Kind::Sum: {
      std::string out;
      bool first = true;
      for (const auto& c : e.children()) {
        std::string term = to_string(c);
        if (first) {
          out = term;
          first = false;
        } else if (!term.empty() && term.front() == '-') {
          out += " - " + term.substr(1);
        } else {
          out += " + " + term;
        }
      }
      return out;
    }
    case Expr::Kind::Product: {
      auto children = e.children();
      std::string out;
      std::size_t start = 0;
      if (children.front().is_constant() && children.front().value() == -1) {
        out = "-";
        start = 1;
      }
      for (std::size_t i = start; i < children.size(); ++i) {
        if (i > start) out += kDot;
        out += render_factor(children[i]);
      }
      return out;
    }
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Expr parse_sum() {
    std::vector<Expr> terms;
    terms.push_back(parse_product());
    for (;;) {
      if (consume("+")) terms.push_back(parse_product());
      else if (consume("-")) terms.push_back(-parse_product());
      else break;
    }
    return Expr::sum_of(std::move(terms));
  }

  Expr parse_product() {
    std::vector<Expr> factors;
    factors.push_back(parse_factor());
    while (consume(kDot) || consume("*")) factors.push_back(parse_factor());
    return Expr::product_of(std::move(factors));
  }

  Expr parse_factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (consume("-")) return -parse_factor();
    if (consume("(")) {
      Expr inner = parse_sum();
      if (!consume(")")) fail("expected ')'");
      return inner;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Expr::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr parse_number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits();
      else pos_ = save;
    }
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      digits();
      if (pos_ == den_start) fail("expected denominator");
    }
    return Expr(parse_rational(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant: return {{"type", "const"}, {"value", to_string(e.value())}};
    case Expr::Kind::Variable: return {{"type", "var"}, {"name", e.name()}};
    case Expr::Kind::Sum:
    case Expr::Kind::Product: {
      nlohmann::json children = nlohmann::json::array();
      for (const auto& c : e.children()) children.push_back(to_json(c));
      return {{"type", e.kind() == Expr::Kind::Sum ? "sum" : "product"}, {"children", children}};
    }
  }
  return {};
}

Expr expr_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error(ErrorCode::Parse, "expression node must be an object with 'type'");
  const std::string type = j.at("type").get<std::string>();
  if (type == "const") return Expr(parse_rational(j.at("value").get<std::string>()));
  if (type == "var") return Expr::variable(j.at("name").get<std::string>());
  if (type == "sum" || type == "product") {
    std::vector<Expr> children;
    for (const auto& c : j.at("children")) children.push_back(expr_from_json(c));
    return type == "sum" ? Expr::sum_of(std::move(children)) : Expr::product_of(std::move(children));
  }
  throw Error(ErrorCode::Parse, "unknown expression node type '" + type + "'");
}

}  // namespace arbor
