#pragma once

#include <cstdint>
#include <vector>

#include "quasiper/polynomial.hpp"

namespace quasiper {

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Euler's totient.
std::int64_t euler_phi(std::int64_t n);

/// The n-th cyclotomic polynomial, (x^n - 1) / prod_{d | n, d < n} Phi_d.
/// Results are memoized process-wide; the cache is guarded by a mutex.
const Polynomial& cyclotomic(std::int64_t n);

/// Largest e such that Phi_n^e divides p. Throws on p = 0 or n < 1.
int cyclotomic_multiplicity(const Polynomial& p, std::int64_t n);

}  // namespace quasiper
