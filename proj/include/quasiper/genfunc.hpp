#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "quasiper/polynomial.hpp"
#include "quasiper/quasipoly.hpp"
#include "quasiper/rational.hpp"

namespace quasiper {

/// Multiset of cyclotomic factors: n -> multiplicity of Phi_n.
using CyclotomicFactors = std::map<std::int64_t, int>;

/// unit * numerator(x) / prod_n Phi_n(x)^e_n.
///
/// The denominator stays factored; its multiplicities are the pole orders at
/// the primitive n-th roots of unity once the fraction is reduced. Reduction
/// is computed on first use and shared between copies.
class RationalGF {
 public:
  RationalGF();
  RationalGF(Polynomial numerator, CyclotomicFactors den_factors, Rational unit = 1);

  /// numerator / prod_i (1 - x^{a_i}).
  static RationalGF from_exponents(Polynomial numerator, std::span<const std::int64_t> exponents);

  /// numerator / denominator for an arbitrary polynomial denominator.
  /// Throws "poles are not roots of unity — not a quasi-polynomial" when the
  /// reduced denominator is not a product of cyclotomic polynomials.
  static RationalGF from_polynomials(const Polynomial& numerator, const Polynomial& denominator);

  const Polynomial& numerator() const { return numerator_; }
  const CyclotomicFactors& den_factors() const { return factors_; }
  const Rational& unit() const { return unit_; }

  /// prod_n Phi_n^e_n (the unit is not folded in).
  Polynomial expanded_denominator() const;
  std::int64_t denominator_degree() const;
  bool is_zero() const { return numerator_.is_zero(); }
  bool is_proper() const;

  /// Lowest terms with unit folded into the numerator. Zero has no factors.
  const RationalGF& reduced() const;
  bool is_reduced() const;

  /// First `count` coefficients of the power series at 0.
  std::vector<Rational> series(std::size_t count) const;

  /// Equality as rational functions.
  friend bool operator==(const RationalGF& a, const RationalGF& b);

 private:
  struct Cache;

  Polynomial numerator_;
  CyclotomicFactors factors_;
  Rational unit_ = 1;
  std::shared_ptr<Cache> cache_;
};

/// sum_{k>=0} q(k) x^k, reduced.
RationalGF from_quasipolynomial(const QuasiPolynomial& q);

/// Inverse of from_quasipolynomial: period lcm of the pole orders' keys,
/// degree (largest multiplicity) - 1. Throws "polynomial part present" for
/// improper input.
QuasiPolynomial to_quasipolynomial(const RationalGF& r);

/// n -> order of every primitive n-th root of unity as a pole of r.
CyclotomicFactors pole_orders(const RationalGF& r);

/// x d/dx r, reduced.
RationalGF x_derivative(const RationalGF& r);

/// sum_{k>=0} c(k) k^m x^k, reduced.
RationalGF monomial_gf(const PeriodicFunction& c, int m);

RationalGF multiply(const RationalGF& a, const RationalGF& b);
RationalGF add(const RationalGF& a, const RationalGF& b);

/// r_j = sum_k c_j(k) k^j x^k for j = 0..deg q. Checks sum r_j = f_q.
std::vector<RationalGF> coefficientwise_split(const QuasiPolynomial& q);

}  // namespace quasiper
