#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "quasiper/polynomial.hpp"
#include "quasiper/rational.hpp"

namespace quasiper {

/// A function Z -> Q with a declared (not necessarily minimal) period.
class PeriodicFunction {
 public:
  explicit PeriodicFunction(std::vector<Rational> values);

  std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator()(std::int64_t k) const;
  bool is_zero() const;

 private:
  std::vector<Rational> values_;
};

/// Smallest p dividing the declared period with f(k + p) = f(k) for all k.
std::int64_t minimum_period(const PeriodicFunction& f);

/// q(k) = sum_j c_j(k) k^j with every c_j periodic of period P.
///
/// The table is indexed [j][r]: row j is c_j, column r its value on the
/// residue class r mod P. Rows above the last nonzero one are dropped at
/// construction; the zero quasi-polynomial has degree -1, period 1 and an
/// empty table. The period is kept as constructed and is not minimized.
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  QuasiPolynomial(std::int64_t period, std::vector<std::vector<Rational>> rows);

  /// Period-1 quasi-polynomial from ordinary coefficients, lowest first.
  static QuasiPolynomial polynomial(std::vector<Rational> coeffs);

  std::int64_t period() const { return period_; }
  int degree() const { return static_cast<int>(rows_.size()) - 1; }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const Rational& coefficient(int j, std::int64_t residue) const;
  PeriodicFunction coefficient_function(int j) const;

  /// Defined on all of Z; negative k use the residue ((k mod P) + P) mod P.
  Rational operator()(std::int64_t k) const;

  /// Same function, stored at a multiple of the current period.
  QuasiPolynomial with_period(std::int64_t multiple) const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  std::int64_t period_ = 1;
  std::vector<std::vector<Rational>> rows_;
};

inline Rational evaluate(const QuasiPolynomial& q, std::int64_t k) { return q(k); }

/// True when both agree as functions (periods may differ).
bool same_function(const QuasiPolynomial& a, const QuasiPolynomial& b);

QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b);
QuasiPolynomial operator*(const Rational& c, const QuasiPolynomial& q);

struct PeriodProfile {
  std::vector<std::int64_t> periods;  // minimum period of c_0 .. c_d
  std::int64_t lcm = 1;               // minimum period of q itself
};

PeriodProfile minimum_period_profile(const QuasiPolynomial& q);

/// Rebuilds a quasi-polynomial from consecutive samples q(first_k), q(first_k + 1), ...
///
/// Each residue class is fitted with a degree <= degree_bound polynomial
/// through its first degree_bound + 1 samples; every other sample is then
/// checked against the fit. Needs at least period * (degree_bound + 1)
/// samples. Throws "not a quasi-polynomial of claimed period/degree" when a
/// leftover sample disagrees.
QuasiPolynomial interpolate(std::span<const Rational> values, std::int64_t period, int degree_bound,
                            std::int64_t first_k = 0);

/// C(k) = sum_{m=0}^{k} A(k - m) B(m).
///
/// Sums directly for k < lcm(P_A, P_B) * (d + e + 3), interpolates, then
/// confirms the generating-function identity f_C = f_A f_B as an exact
/// polynomial identity. A failed confirmation throws CrossCheckFailure.
QuasiPolynomial convolve(const QuasiPolynomial& a, const QuasiPolynomial& b);

/// Numerator N of sum_{k>=0} q(k) x^k = N(x) / (1 - x^P)^(d+1), deg N < P (d + 1).
Polynomial generating_numerator(const QuasiPolynomial& q);

}  // namespace quasiper
