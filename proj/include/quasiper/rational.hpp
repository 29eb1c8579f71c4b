#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace quasiper {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps mpq values canonical after arithmetic

// Accepts "a", "-a", "a/b". Throws quasiper::Error on malformed input or b = 0.
Rational parse_rational(std::string_view text);

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

inline Integer make_integer(std::int64_t v) { return Integer{static_cast<long>(v)}; }

// Throws quasiper::Error when the value does not fit.
std::int64_t to_int64(const Integer& value);

// Checked lcm/gcd on positive periods; lcm throws on int64 overflow.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace quasiper
