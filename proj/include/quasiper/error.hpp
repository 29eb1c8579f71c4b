#pragma once

#include <stdexcept>
#include <string>

namespace quasiper {

// Invalid input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force or interpolation workload larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Two independent routes to the same quantity disagreed. Always a bug.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace quasiper
