#include "pbf/scalar.hpp"

#include <charconv>
#include <cstdlib>
#include <cctype>

namespace pbf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw parse_error("invalid number literal: '" + std::string(whole) + "'");
  Integer v{std::string(s)};
  if (negative) v = -v;
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw parse_error("empty number literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view expo = s.substr(e + 1);
    std::string_view digits = expo;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-'))
      digits.remove_prefix(1);
    if (!all_digits(digits))
      throw parse_error("invalid exponent in '" + std::string(text) + "'");
    exponent = std::strtol(std::string(expo).c_str(), nullptr, 10);
    s = s.substr(0, e);
  }

  std::string mantissa;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw parse_error("invalid number literal: '" + std::string(text) + "'");
    if (!whole.empty() && !all_digits(whole))
      throw parse_error("invalid number literal: '" + std::string(text) + "'");
    if (!frac.empty() && !all_digits(frac))
      throw parse_error("invalid number literal: '" + std::string(text) + "'");
    mantissa = std::string(whole) + std::string(frac);
    frac_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(s))
      throw parse_error("invalid number literal: '" + std::string(text) + "'");
    mantissa = std::string(s);
  }
  if (mantissa.empty())
    throw parse_error("invalid number literal: '" + std::string(text) + "'");

  Rational value{Integer(mantissa)};
  long net = exponent - frac_digits;
  Integer pow10 = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(net < 0 ? -net : net));
  if (net >= 0)
    value *= Rational(pow10);
  else
    value /= Rational(pow10);
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& q) {
  std::string num = numerator(q).str();
  if (denominator(q) == 1) return num;
  return num + "/" + denominator(q).str();
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::size_t default_minor_limit() {
  if (const char* env = std::getenv("PBF_MINOR_LIMIT")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 8;
}

}  // namespace pbf
