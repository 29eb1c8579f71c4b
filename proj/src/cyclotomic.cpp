#include "quasiper/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "quasiper/error.hpp"

namespace quasiper {

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error("divisors of non-positive integer");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw Error("euler_phi of non-positive integer");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const Polynomial& cyclotomic(std::int64_t n) {
  if (n < 1) throw Error("cyclotomic polynomial needs n >= 1");
  // std::map nodes are stable, so references stay valid after later inserts.
  static std::mutex mutex;
  static std::map<std::int64_t, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Polynomial quotient = -Polynomial::one_minus_x_pow(static_cast<std::size_t>(n));  // x^n - 1
  for (std::int64_t d : divisors(n)) {
    if (d == n) break;
    quotient = exact_divide(quotient, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(quotient)).first->second;
}

int cyclotomic_multiplicity(const Polynomial& p, std::int64_t n) {
  if (p.is_zero()) throw Error("cyclotomic multiplicity of the zero polynomial");
  const Polynomial& phi = cyclotomic(n);
  int e = 0;
  Polynomial rest = p;
  while (rest.degree() >= phi.degree()) {
    DivMod qr = divmod(rest, phi);
    if (!qr.remainder.is_zero()) break;
    rest = std::move(qr.quotient);
    ++e;
  }
  return e;
}

}  // namespace quasiper
