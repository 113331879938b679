// arbor: determinants and their factorizations through arborescences.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arbor/arborescence.hpp"
#include "arbor/io.hpp"
#include "arbor/isolation.hpp"
#include "arbor/matrix.hpp"
#include "arbor/transforms.hpp"
#include "arbor/verify.hpp"

namespace fs = std::filesystem;
using namespace arbor;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitGuardRail = 2;

std::vector<VertexId> parse_order(const std::string& text) {
  std::vector<VertexId> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<VertexId>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "bad vertex '" + item + "' in --order");
    }
  }
  return out;
}

template <Weight W>
std::string render_total(const Factorization<W>& f) {
  if (f.terms.empty()) return "0";
  if constexpr (WeightTraits<W>::symbolic) {
    std::string out;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      if (i > 0) out += " + ";
      out += render_term(f.terms[i]);
    }
    return out;
  } else {
    return WeightTraits<W>::to_string(f.total());
  }
}

/// Runs `body` with the document as a Digraph<double> when every weight is a
/// number, otherwise as a Digraph<Expr>.
template <class Body>
void with_graph(const InputDocument& doc, Body&& body) {
  if (doc.numeric) {
    body(doc.matrix ? matrix_to_digraph(to_numeric(*doc.matrix)) : to_numeric(doc.graph));
  } else {
    body(doc.graph);
  }
}

void cmd_det(const fs::path& file, const std::string& method) {
  const InputDocument doc = load_document(file);
  with_graph(doc, [&]<class W>(const Digraph<W>& g) {
    if (method == "tree") {
      std::cout << WeightTraits<W>::to_string(arborescence_sum(g, kRoot)) << "\n";
    } else if (method == "reference") {
      if constexpr (std::same_as<W, double>) {
        std::cout << format_number(det_reference(digraph_to_matrix(g))) << "\n";
      } else {
        throw Error(ErrorCode::NonNumericWeight, "the reference method needs numeric entries");
      }
    } else {
      Strategy s = method == "factor-partitioned" ? Strategy::Partitioned : Strategy::Sequential;
      std::cout << render_total(factor(g, s)) << "\n";
    }
  });
}

template <Weight W>
class DotEmitter {
 public:
  DotEmitter(fs::path dir, Strategy strategy) : dir_(std::move(dir)), strategy_(strategy) {
    fs::create_directories(dir_);
  }

  void write(const std::string& kind, const std::vector<std::vector<VertexId>>& levels,
             const std::vector<VertexId>& rooted, const std::vector<VertexId>& unrooted, const Digraph<W>& g) {
    std::ostringstream name;
    name << std::setw(3) << std::setfill('0') << count_++ << "-" << kind << ".dot";
    std::ofstream out(dir_ / name.str());
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name.str()).string());
    out << to_dot(g, name.str().substr(0, name.str().size() - 4));
    manifest_.push_back({{"file", name.str()},
                         {"strategy", std::string(to_string(strategy_))},
                         {"kind", kind},
                         {"levels", levels},
                         {"rooted", rooted},
                         {"unrooted", unrooted}});
  }

  void finish() {
    std::ofstream out(dir_ / "manifest.json");
    out << manifest_.dump(2) << "\n";
  }

 private:
  fs::path dir_;
  Strategy strategy_;
  std::size_t count_ = 0;
  nlohmann::json manifest_ = nlohmann::json::array();
};

void cmd_factor(const fs::path& file, const std::string& strategy_name, const std::string& order,
                const std::string& dot_dir) {
  const Strategy strategy = parse_strategy(strategy_name);
  const InputDocument doc = load_document(file);
  with_graph(doc, [&]<class W>(const Digraph<W>& g) {
    FactorOptions<W> options;
    if (!order.empty()) options.order = parse_order(order);
    std::optional<DotEmitter<W>> dots;
    if (!dot_dir.empty()) {
      dots.emplace(dot_dir, strategy);
      dots->write("input", {}, {}, {}, g);
      options.observer = [&](const FactorStep& step, const Digraph<W>& h) {
        dots->write(std::string(to_string(step.kind)), step.levels, step.rooted, step.unrooted, h);
      };
    }
    auto f = factor(g, strategy, options);
    if (dots) dots->finish();
    for (const auto& term : f.terms) std::cout << render_term(term) << "\n";
    std::cout << "= " << WeightTraits<W>::to_string(WeightTraits<W>::normalize(f.total())) << "\n";
  });
}

void cmd_enumerate(const fs::path& file, VertexId root) {
  const InputDocument doc = load_document(file);
  with_graph(doc, [&]<class W>(const Digraph<W>& g) {
    for (const auto& a : enumerate_arborescences(g, root)) {
      std::vector<std::pair<VertexId, VertexId>> arcs;
      for (ArcId id : a.arcs) arcs.emplace_back(g.arc(id).source, g.arc(id).target);
      std::sort(arcs.begin(), arcs.end());
      std::string line;
      for (const auto& [s, t] : arcs) line += std::to_string(s) + "->" + std::to_string(t) + " ";
      std::cout << line << ": " << WeightTraits<W>::to_string(arborescence_weight(a, g)) << "\n";
    }
    std::cout << WeightTraits<W>::to_string(arborescence_sum(g, root)) << "\n";
  });
}

void cmd_export_dot(const fs::path& file, const fs::path& dir, bool isolate) {
  const InputDocument doc = load_document(file);
  fs::create_directories(dir);
  with_graph(doc, [&]<class W>(const Digraph<W>& g) {
    auto write = [&](const std::string& name, const Digraph<W>& h) {
      std::ofstream out(dir / (name + ".dot"));
      if (!out) throw std::runtime_error("cannot write " + (dir / (name + ".dot")).string());
      out << to_dot(h, name);
      std::cout << (dir / (name + ".dot")).string() << "\n";
    };
    write("digraph", g);
    if (isolate) write("isolated", combine_all_parallel(move_all_to_root(g)));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinants and their factorizations through arborescences of matrix digraphs"};
  app.require_subcommand(1);

  std::string file, method = "tree", strategy = "sequential", order, dot_dir, out_dir;
  std::size_t root = 0, cases = 500;
  std::uint64_t seed = 42;
  bool isolate = false;

  auto* det = app.add_subcommand("det", "Print the determinant");
  det->add_option("file", file, "Matrix (JSON or CSV) or digraph JSON")->required();
  det->add_option("--method", method, "tree, reference, factor, factor-sequential or factor-partitioned")
      ->check(CLI::IsMember({"tree", "reference", "factor", "factor-sequential", "factor-partitioned"}));

  auto* fac = app.add_subcommand("factor", "Print the factorization, one term per line");
  fac->add_option("file", file)->required();
  fac->add_option("--strategy", strategy, "sequential or partitioned")
      ->check(CLI::IsMember({"sequential", "partitioned"}));
  fac->add_option("--order", order, "Vertex priority, e.g. 3,2,1");
  fac->add_option("--emit-dot", dot_dir, "Write every intermediate digraph as DOT into this directory");

  auto* en = app.add_subcommand("enumerate", "List every arborescence and the total weight");
  en->add_option("file", file)->required();
  en->add_option("--root", root, "Root vertex");

  auto* ver = app.add_subcommand("verify", "Run the randomized invariant suites");
  ver->add_option("--seed", seed);
  ver->add_option("--cases", cases);

  auto* dot = app.add_subcommand("export-dot", "Write the digraph as DOT");
  dot->add_option("file", file)->required();
  dot->add_option("dir", out_dir)->required();
  dot->add_flag("--isolate", isolate, "Also write the digraph with every movable arc moved to the root");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*det) cmd_det(file, method);
    if (*fac) cmd_factor(file, strategy, order, dot_dir);
    if (*en) cmd_enumerate(file, root);
    if (*dot) cmd_export_dot(file, out_dir, isolate);
    if (*ver) {
      auto report = run_verification(seed, cases);
      std::cout << format_report(report);
      return report.ok() ? 0 : kExitInput;
    }
  } catch (const Error& e) {
    std::cerr << "arbor: " << e.what() << "\n";
    return e.is_guard_rail() ? kExitGuardRail : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "arbor: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
