#pragma once

#include <cstddef>
#include <vector>

#include "quasiper/polynomial.hpp"

namespace quasiper {

/// First `count` Taylor coefficients of num/den at the origin.
///
/// Uses the recurrence den_0 a_k = num_k - sum_{i>=1} den_i a_{k-i}.
/// Throws "denominator vanishes at origin" when den(0) = 0.
std::vector<Rational> series_coefficients(const Polynomial& num, const Polynomial& den, std::size_t count);

}  // namespace quasiper
