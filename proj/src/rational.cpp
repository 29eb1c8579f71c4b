#include "quasiper/rational.hpp"

#include <limits>
#include <numeric>

#include "quasiper/error.hpp"

namespace quasiper {

Rational parse_rational(std::string_view text) {
  std::string s{text};
  auto bad = [&] { return Error("malformed rational \"" + s + "\""); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, true)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n{num, 10};
  Integer d{den, 10};
  if (d == 0) throw Error("rational with zero denominator: \"" + s + "\"");
  Rational r{n, d};
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw Error("integer out of 64-bit range: " + value.get_str());
  return static_cast<std::int64_t>(value.get_si());
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw Error("lcm of non-positive period");
  std::int64_t g = std::gcd(a, b);
  std::int64_t q = a / g;
  if (q > std::numeric_limits<std::int64_t>::max() / b) throw Error("period lcm overflows 64 bits");
  return q * b;
}

}  // namespace quasiper
