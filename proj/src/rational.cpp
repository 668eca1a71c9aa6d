#include "sgc/rational.hpp"

#include <charconv>

#include "sgc/error.hpp"

namespace sgc {

std::string format_rational(const Rational& x) {
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 15) {
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    const bool negative = !int_part.empty() && int_part.front() == '-';
    const std::int64_t whole =
        int_part.empty() || int_part == "-" ? 0 : parse_int(int_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t frac = parse_int(frac_part, text);
    if (frac < 0) throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    Rational magnitude = Rational(negative ? -whole : whole) + Rational(frac, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_int(text, text));
}

std::int64_t floor_of(const Rational& x) {
  std::int64_t q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

Rational mod_positive(const Rational& x, const Rational& modulus) {
  return x - modulus * Rational(floor_of(x / modulus));
}

}  // namespace sgc
