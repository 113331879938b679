#include "arbor/verify.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "arbor/arborescence.hpp"
#include "arbor/isolation.hpp"
#include "arbor/matrix.hpp"
#include "arbor/random.hpp"
#include "arbor/transforms.hpp"

namespace arbor {

namespace {

constexpr double kRelTol = 1e-9;
constexpr std::size_t kMaxReportedFailures = 5;

bool close(double a, double b) { return std::abs(a - b) <= kRelTol * std::max(1.0, std::abs(b)); }

/// Returns an empty string on success, otherwise a description.
using Check = std::function<std::string(Rng&)>;

template <Weight W>
std::optional<std::pair<Digraph<W>, ArcId>> random_legal_move(Rng& rng, const Digraph<W>& g) {
  std::vector<std::pair<ArcId, VertexId>> candidates;
  for (const auto& a : g.arcs()) {
    for (VertexId c = 0; c < g.vertex_count(); ++c) {
      if (c != a.source && c != a.target) candidates.emplace_back(a.id, c);
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (const auto& [id, c] : candidates) {
    try {
      return std::make_pair(move_arc(g, id, c), id);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionSourceTarget && e.code() != ErrorCode::PreconditionNewSourceTarget) throw;
    }
  }
  return std::nullopt;
}

std::string check_move(Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto g = random_root_valid_digraph<Rational>(rng, {}, random_positive_rational);
    auto moved = random_legal_move(rng, g);
    if (!moved) continue;
    const auto& [h, id] = *moved;
    if (arborescence_sum(g, kRoot) != arborescence_sum(h, kRoot)) return "rational sum changed by a legal move";
    std::size_t with_before = count_arborescences_containing(g, kRoot, id);
    std::size_t with_after = count_arborescences_containing(h, kRoot, id);
    std::size_t total_before = count_arborescences(g, kRoot);
    std::size_t total_after = count_arborescences(h, kRoot);
    if (with_before != with_after || total_before - with_before != total_after - with_after) {
      return "arborescence correspondence broken by a legal move";
    }
    auto gd = g.map_weights([](const Rational& r) { return r.convert_to<double>(); });
    auto hd = h.map_weights([](const Rational& r) { return r.convert_to<double>(); });
    if (!close(arborescence_sum(hd, kRoot), arborescence_sum(gd, kRoot))) return "double sum changed by a legal move";
    return {};
  }
  return "no legal move found in 100 random graphs";
}

std::string check_combine(Rng& rng) {
  auto g = random_root_valid_digraph<Rational>(rng, {}, random_positive_rational);
  while (g.arc_count() == 0) g = random_root_valid_digraph<Rational>(rng, {}, random_positive_rational);
  std::uniform_int_distribution<std::size_t> pick(0, g.arc_count() - 1);
  const auto first = g.arcs()[pick(rng)];
  auto [with_parallel, twin] = g.add_arc(first.source, first.target, random_positive_rational(rng));
  auto merged = combine_arcs(with_parallel, first.id, twin);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (arborescence_sum(with_parallel, root) != arborescence_sum(merged, root)) {
      return "combine changed the sum at root " + std::to_string(root);
    }
  }
  auto once = combine_all_parallel(with_parallel);
  if (!(combine_all_parallel(once) == once)) return "combine_all_parallel is not idempotent";
  if (arborescence_sum(once, kRoot) != arborescence_sum(with_parallel, kRoot)) return "combine_all_parallel changed the sum";
  return {};
}

std::string check_root_split(Rng& rng) {
  RandomGraphOptions options;
  options.root_arc_probability = 1.0;
  auto g = random_root_valid_digraph<Rational>(rng, options, random_positive_rational);
  std::uniform_int_distribution<VertexId> pick(1, g.vertex_count() - 1);
  VertexId v = pick(rng);
  auto split = root_split(g, v);
  if (arborescence_sum(g, kRoot) != arborescence_sum(split.rooted, kRoot) + arborescence_sum(split.unrooted, kRoot)) {
    return "root split at " + std::to_string(v) + " does not partition the sum";
  }
  return {};
}

std::string check_matrix_tree(Rng& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 6);
  auto a = random_u_matrix(rng, size(rng));
  double tree = det_via_arborescences(a);
  double ref = det_reference(a);
  if (!close(tree, ref)) return "arborescence sum " + format_number(tree) + " vs elimination " + format_number(ref);
  return {};
}

std::string check_factor(Rng& rng, Strategy strategy) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  auto a = random_signed_matrix(rng, size(rng));
  double ref = det_reference(a);
  double total = factor(matrix_to_digraph(a), strategy).total();
  if (!close(total, ref)) {
    return std::string(to_string(strategy)) + " factorization " + format_number(total) + " vs " + format_number(ref);
  }
  return {};
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed, std::size_t cases) {
  const std::vector<std::pair<std::string, Check>> suites = {
      {"move-arc", check_move},
      {"combine-arcs", check_combine},
      {"root-split", check_root_split},
      {"matrix-tree", check_matrix_tree},
      {"factor-sequential", [](Rng& rng) { return check_factor(rng, Strategy::Sequential); }},
      {"factor-partitioned", [](Rng& rng) { return check_factor(rng, Strategy::Partitioned); }},
  };
  VerifyReport report;
  for (const auto& [name, check] : suites) report.suites.push_back(SuiteResult{name, 0, 0, {}});

  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    bool case_ok = true;
    for (std::size_t s = 0; s < suites.size(); ++s) {
      std::string failure;
      try {
        failure = suites[s].second(rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      auto& result = report.suites[s];
      ++result.total;
      if (failure.empty()) {
        ++result.passed;
      } else {
        case_ok = false;
        if (result.failures.size() < kMaxReportedFailures) {
          result.failures.push_back("case " + std::to_string(c) + ": " + failure);
        }
      }
    }
    ++report.cases_total;
    if (case_ok) ++report.cases_passed;
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& s : report.suites) {
    out << std::left << std::setw(20) << s.name << s.passed << "/" << s.total << "\n";
    for (const auto& f : s.failures) out << "  " << f << "\n";
  }
  out << report.cases_passed << "/" << report.cases_total << " passed\n";
  return out.str();
}

}  // namespace arbor
