#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace sgc {

using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms; integers print as "p/1".
std::string format_rational(const Rational& x);

// Accepts "p/q", "p" or a terminating decimal such as "0.25".
// Throws Error{ParseError} on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

// Floor of x as an integer.
std::int64_t floor_of(const Rational& x);

// x reduced into [0, modulus).
Rational mod_positive(const Rational& x, const Rational& modulus);

}  // namespace sgc
