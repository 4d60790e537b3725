#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "pbf/errors.hpp"

namespace pbf {

using Integer = boost::multiprecision::cpp_int;

/// Exact backend: arbitrary-precision rationals, always reduced, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

template <class S>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

/// Parses "p/q", integer, plain decimal ("1.25") or scientific ("1e-9", "2.5e3")
/// literals into an exact rational. Throws parse_error on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q" for non-integers, "p" otherwise.
std::string format_rational(const Rational& q);

/// Shortest decimal that round-trips through a double.
std::string format_double(double x);

/// Brute-force minor enumeration size cap: PBF_MINOR_LIMIT when set, else 8.
std::size_t default_minor_limit();

template <class S>
S scalar_from_string(const std::string& text);

template <>
inline Rational scalar_from_string<Rational>(const std::string& text) {
  return parse_rational(text);
}

template <>
inline double scalar_from_string<double>(const std::string& text) {
  try {
    return static_cast<double>(parse_rational(text));
  } catch (const parse_error&) {
    throw;
  }
}

template <class S>
std::string scalar_to_string(const S& value);

template <>
inline std::string scalar_to_string<Rational>(const Rational& value) {
  return format_rational(value);
}

template <>
inline std::string scalar_to_string<double>(const double& value) {
  return format_double(value);
}

template <class S>
double scalar_to_double(const S& value) {
  return static_cast<double>(value);
}

template <class S>
S scalar_abs(const S& value) {
  return value < S(0) ? S(-value) : value;
}

/// x^e for integer e (negative exponents allowed, x != 0 then).
template <class S>
S scalar_pow(const S& base, long exponent) {
  if (exponent < 0) return S(1) / scalar_pow(base, -exponent);
  S result(1);
  S acc = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= acc;
    acc *= acc;
    e >>= 1;
  }
  return result;
}

}  // namespace pbf
