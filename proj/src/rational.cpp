#include "arbor/rational.hpp"

#include <cctype>

#include "arbor/error.hpp"

namespace arbor {

using boost::multiprecision::cpp_int;

std::string to_string(const Rational& r) {
  const cpp_int& num = boost::multiprecision::numerator(r);
  const cpp_int& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

cpp_int parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");
  cpp_int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

cpp_int pow10(long e) {
  cpp_int p = 1;
  for (long i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_digits(text.substr(0, slash), whole);
    cpp_int den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      cpp_int magnitude = parse_digits(exp_text, whole);
      if (magnitude > 4000) throw Error(ErrorCode::Parse, "exponent out of range in '" + std::string(whole) + "'");
      exponent = magnitude.convert_to<long>();
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = text.substr(0, dot);
      std::string_view frac_part = text.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) {
        throw Error(ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");
      }
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(text);
    }
    cpp_int mantissa = parse_digits(digits, whole);
    value = exponent >= 0 ? Rational(mantissa * pow10(exponent)) : Rational(mantissa, pow10(-exponent));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace arbor
