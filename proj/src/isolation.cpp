#include "arbor/isolation.hpp"

#include <vector>

namespace arbor {

namespace {

constexpr std::size_t kMaxCountArgument = 20;

void check_count_argument(std::size_t n) {
  if (n > kMaxCountArgument) {
    throw Error(ErrorCode::TooLarge, "count argument " + std::to_string(n) + " exceeds " + std::to_string(kMaxCountArgument));
  }
}

}  // namespace

BigCount ordered_bell(std::size_t n) {
  check_count_argument(n);
  // B(m) = sum_{k=1..m} C(m, k) B(m - k), B(0) = 1
  std::vector<BigCount> bell(n + 1, 0);
  std::vector<std::vector<BigCount>> binom(n + 1, std::vector<BigCount>(n + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    binom[m][0] = 1;
    for (std::size_t k = 1; k <= m; ++k) binom[m][k] = binom[m - 1][k - 1] + (k < m ? binom[m - 1][k] : BigCount(0));
  }
  bell[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 1; k <= m; ++k) bell[m] += binom[m][k] * bell[m - k];
  }
  return bell[n];
}

std::uint64_t rooted_subset_count(std::size_t n) {
  check_count_argument(n);
  return (std::uint64_t{1} << n) - 1;
}

std::string_view to_string(Strategy s) {
  return s == Strategy::Sequential ? "sequential" : "partitioned";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "sequential") return Strategy::Sequential;
  if (text == "partitioned") return Strategy::Partitioned;
  throw Error(ErrorCode::Parse, "unknown strategy '" + std::string(text) + "'");
}

std::string_view to_string(FactorStep::Kind kind) {
  switch (kind) {
    case FactorStep::Kind::Rooted: return "rooted";
    case FactorStep::Kind::Isolated: return "isolated";
    case FactorStep::Kind::Leaf: return "leaf";
  }
  return "unknown";
}

}  // namespace arbor
