#include "quasiper/series.hpp"

#include <algorithm>

#include "quasiper/error.hpp"

namespace quasiper {

std::vector<Rational> series_coefficients(const Polynomial& num, const Polynomial& den, std::size_t count) {
  if (den.is_zero() || den.coefficient(0) == 0) throw Error("denominator vanishes at origin");
  const auto& d = den.coefficients();
  const Rational inv0 = 1 / d[0];
  std::vector<Rational> out(count);
  Rational acc;
  for (std::size_t k = 0; k < count; ++k) {
    acc = num.coefficient(k);
    const std::size_t upto = std::min(k, d.size() - 1);
    for (std::size_t i = 1; i <= upto; ++i) {
      if (d[i] == 0) continue;
      acc -= d[i] * out[k - i];
    }
    out[k] = acc * inv0;
  }
  return out;
}

}  // namespace quasiper
