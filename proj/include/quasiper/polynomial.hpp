#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "quasiper/rational.hpp"

namespace quasiper {

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and degree() == -1 for it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<std::int64_t> integer_coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// 1 - x^a
  static Polynomial one_minus_x_pow(std::size_t a);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// this * x^n
  Polynomial shifted(std::size_t n) const;
  /// this mod x^n
  Polynomial truncated(std::size_t n) const;
  /// this * (1 - x^a)^times, by repeated shift-and-subtract.
  Polynomial times_one_minus_x_pow(std::size_t a, int times = 1) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws quasiper::Error on a zero divisor.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Exact quotient a / b. Throws quasiper::Error if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd over Q. Throws "gcd undefined" when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Human readable form, highest degree first: "x^2 - 1", "1/2*x + 3".
std::string to_string(const Polynomial& p);

}  // namespace quasiper
