#include "essentia/rational.hpp"

#include <cctype>

#include "essentia/errors.hpp"

namespace essentia {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (!all_digits(frac_part))
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    mpz_class whole = (int_part.empty() || int_part == "-" || int_part == "+")
                          ? mpz_class(0)
                          : parse_integer(int_part, text);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    mpz_class frac(std::string(frac_part), 10);
    if (negative) frac = -frac;
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text, text));
}

}  // namespace essentia
