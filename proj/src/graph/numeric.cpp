#include "planted/numeric.hpp"

#include <cctype>
#include <charconv>

#include "planted/error.hpp"

namespace planted {

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= (n - i);
  return r;
}

BigInt factorial(std::uint64_t n) { return falling_factorial(n, n); }

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) fail(ErrorCode::ParseError, "not a number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(ErrorCode::ParseError, "not a number: '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator: '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    std::int64_t exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
        fail(ErrorCode::ParseError, "bad exponent: '" + std::string(whole) + "'");
      }
      text = text.substr(0, e);
    }
    std::string digits;
    std::int64_t scale = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
      scale = static_cast<std::int64_t>(text.size() - dot - 1);
      if (digits.empty()) fail(ErrorCode::ParseError, "not a number: '" + std::string(whole) + "'");
    } else {
      digits = std::string(text);
    }
    value = Rational(parse_integer(digits, whole));
    const std::int64_t shift = exponent - scale;
    const Rational ten = 10;
    if (shift > 0) value *= pow(ten, static_cast<std::uint64_t>(shift));
    if (shift < 0) value /= pow(ten, static_cast<std::uint64_t>(-shift));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace planted
