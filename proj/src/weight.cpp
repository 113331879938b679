#include "arbor/weight.hpp"

#include <charconv>

namespace arbor {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string WeightTraits<double>::to_string(double w) { return format_number(w); }

}  // namespace arbor
