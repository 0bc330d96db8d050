#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace planted {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

/// Integer power with exact arithmetic.
Rational pow(const Rational& base, std::uint64_t exponent);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

/// Parses "3", "-2/5", "0.125" or "1e-3" into an exact rational.
/// Decimal input is interpreted exactly (0.1 becomes 1/10).
Rational parse_rational(std::string_view text);

}  // namespace planted
