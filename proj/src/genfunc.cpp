#include "quasiper/genfunc.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <utility>

#include "quasiper/cyclotomic.hpp"
#include "quasiper/error.hpp"
#include "quasiper/series.hpp"

namespace quasiper {

namespace {

// Upper bound on series terms used to rebuild a quasi-polynomial.
constexpr std::int64_t kMaxExpansionTerms = 2'000'000;

}  // namespace

// Filled at most once; copies of a RationalGF share it, and all fills compute
// the same value, so readers always see an identical reduced form.
struct RationalGF::Cache {
  std::once_flag once;
  std::unique_ptr<RationalGF> reduced;
  bool self_reduced = false;
};

RationalGF::RationalGF() : cache_(std::make_shared<Cache>()) {}

RationalGF::RationalGF(Polynomial numerator, CyclotomicFactors den_factors, Rational unit)
    : numerator_(std::move(numerator)), unit_(std::move(unit)), cache_(std::make_shared<Cache>()) {
  for (const auto& [n, e] : den_factors) {
    if (n < 1) throw Error("cyclotomic index must be positive");
    if (e < 0) throw Error("cyclotomic multiplicity must be non-negative");
    if (e > 0) factors_.emplace(n, e);
  }
  if (unit_ == 0) numerator_ = Polynomial{};
  if (numerator_.is_zero()) unit_ = 1;
}

RationalGF RationalGF::from_exponents(Polynomial numerator, std::span<const std::int64_t> exponents) {
  CyclotomicFactors factors;
  Rational unit = 1;
  for (std::int64_t a : exponents) {
    if (a < 1) throw Error("exponent in prod (1 - x^a) must be positive");
    for (std::int64_t m : divisors(a)) ++factors[m];
    unit = -unit;  // 1 - x^a = -(x^a - 1)
  }
  return RationalGF(std::move(numerator), std::move(factors), std::move(unit));
}

RationalGF RationalGF::from_polynomials(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw Error("denominator is the zero polynomial");
  if (numerator.is_zero()) return RationalGF();
  const Polynomial g = poly_gcd(numerator, denominator);
  Polynomial num = exact_divide(numerator, g);
  Polynomial rest = exact_divide(denominator, g);

  CyclotomicFactors factors;
  const std::int64_t deg = rest.degree();
  // phi(n) >= sqrt(n / 2), so phi(n) <= deg forces n <= 2 deg^2.
  for (std::int64_t n = 1; n <= 2 * deg * deg && rest.degree() > 0; ++n) {
    if (euler_phi(n) > rest.degree()) continue;
    const int e = cyclotomic_multiplicity(rest, n);
    if (e == 0) continue;
    rest = exact_divide(rest, pow(cyclotomic(n), static_cast<unsigned>(e)));
    factors.emplace(n, e);
  }
  if (rest.degree() > 0) throw Error("poles are not roots of unity — not a quasi-polynomial");
  return RationalGF(std::move(num), std::move(factors), 1 / rest.coefficient(0));
}

Polynomial RationalGF::expanded_denominator() const {
  Polynomial d = Polynomial::constant(1);
  for (const auto& [n, e] : factors_) d = d * pow(cyclotomic(n), static_cast<unsigned>(e));
  return d;
}

std::int64_t RationalGF::denominator_degree() const {
  std::int64_t deg = 0;
  for (const auto& [n, e] : factors_) deg += euler_phi(n) * e;
  return deg;
}

bool RationalGF::is_proper() const { return numerator_.degree() < denominator_degree(); }

bool RationalGF::is_reduced() const { return cache_->self_reduced; }

const RationalGF& RationalGF::reduced() const {
  if (cache_->self_reduced) return *this;
  std::call_once(cache_->once, [this] {
    Polynomial num = numerator_ * unit_;
    CyclotomicFactors left;
    if (!num.is_zero()) {
      for (const auto& [n, e] : factors_) {
        int keep = e;
        const Polynomial& phi = cyclotomic(n);
        while (keep > 0) {
          DivMod qr = divmod(num, phi);
          if (!qr.remainder.is_zero()) break;
          num = std::move(qr.quotient);
          --keep;
        }
        if (keep > 0) left.emplace(n, keep);
      }
    }
    auto r = std::make_unique<RationalGF>(std::move(num), std::move(left));
    r->cache_->self_reduced = true;
    cache_->reduced = std::move(r);
  });
  return *cache_->reduced;
}

std::vector<Rational> RationalGF::series(std::size_t count) const {
  return series_coefficients(numerator_ * unit_, expanded_denominator(), count);
}

bool operator==(const RationalGF& a, const RationalGF& b) {
  const RationalGF& ra = a.reduced();
  const RationalGF& rb = b.reduced();
  return ra.numerator_ == rb.numerator_ && ra.factors_ == rb.factors_;
}

RationalGF from_quasipolynomial(const QuasiPolynomial& q) {
  if (q.is_zero()) return RationalGF().reduced();
  std::vector<std::int64_t> exponents(static_cast<std::size_t>(q.degree() + 1), q.period());
  return RationalGF::from_exponents(generating_numerator(q), exponents).reduced();
}

QuasiPolynomial to_quasipolynomial(const RationalGF& r) {
  const RationalGF& red = r.reduced();
  if (red.is_zero()) return {};
  if (!red.is_proper()) throw Error("polynomial part present");
  std::int64_t period = 1;
  int top = 0;
  for (const auto& [n, e] : red.den_factors()) {
    period = checked_lcm(period, n);
    top = std::max(top, e);
  }
  const int degree = top - 1;
  const std::int64_t terms = period * (degree + 2);
  if (terms > kMaxExpansionTerms)
    throw BudgetExceeded("expansion needs " + std::to_string(terms) + " series terms (limit " +
                         std::to_string(kMaxExpansionTerms) + ")");
  const std::vector<Rational> values = red.series(static_cast<std::size_t>(terms));
  try {
    return interpolate(values, period, degree);
  } catch (const Error& e) {
    throw CrossCheckFailure(std::string("cyclotomic gf did not expand to a quasi-polynomial: ") + e.what());
  }
}

CyclotomicFactors pole_orders(const RationalGF& r) { return r.reduced().den_factors(); }

RationalGF x_derivative(const RationalGF& r) {
  const RationalGF& red = r.reduced();
  if (red.is_zero()) return red;
  const Polynomial& num = red.numerator();
  Polynomial radical = Polynomial::constant(1);
  for (const auto& [n, e] : red.den_factors()) radical = radical * cyclotomic(n);

  // (N/D)' = (N' R - N sum_n e_n Phi_n' R / Phi_n) / (D R), R = prod Phi_n.
  Polynomial log_term;
  for (const auto& [n, e] : red.den_factors()) {
    const Polynomial& phi = cyclotomic(n);
    log_term += phi.derivative() * exact_divide(radical, phi) * make_rational(e);
  }
  Polynomial top = (num.derivative() * radical - num * log_term).shifted(1);
  CyclotomicFactors factors = red.den_factors();
  for (auto& [n, e] : factors) ++e;
  return RationalGF(std::move(top), std::move(factors)).reduced();
}

RationalGF monomial_gf(const PeriodicFunction& c, int m) {
  if (m < 0) throw Error("monomial exponent must be non-negative");
  const std::int64_t exps[] = {c.period()};
  RationalGF gf = RationalGF::from_exponents(Polynomial(c.values()), exps).reduced();
  for (int i = 0; i < m; ++i) gf = x_derivative(gf);
  return gf;
}

RationalGF multiply(const RationalGF& a, const RationalGF& b) {
  CyclotomicFactors factors = a.den_factors();
  for (const auto& [n, e] : b.den_factors()) factors[n] += e;
  return RationalGF(a.numerator() * b.numerator(), std::move(factors), a.unit() * b.unit()).reduced();
}

RationalGF add(const RationalGF& a, const RationalGF& b) {
  const RationalGF& ra = a.reduced();
  const RationalGF& rb = b.reduced();
  if (ra.is_zero()) return rb;
  if (rb.is_zero()) return ra;
  CyclotomicFactors common = ra.den_factors();
  for (const auto& [n, e] : rb.den_factors()) common[n] = std::max(common[n], e);
  auto lift = [&common](const RationalGF& g) {
    Polynomial num = g.numerator();
    for (const auto& [n, e] : common) {
      auto it = g.den_factors().find(n);
      const int have = it == g.den_factors().end() ? 0 : it->second;
      if (e > have) num = num * pow(cyclotomic(n), static_cast<unsigned>(e - have));
    }
    return num;
  };
  Polynomial num = lift(ra) + lift(rb);
  return RationalGF(std::move(num), std::move(common)).reduced();
}

std::vector<RationalGF> coefficientwise_split(const QuasiPolynomial& q) {
  std::vector<RationalGF> parts;
  RationalGF total;
  for (int j = 0; j <= q.degree(); ++j) {
    const PeriodicFunction c = q.coefficient_function(j);
    parts.push_back(c.is_zero() ? RationalGF().reduced() : monomial_gf(c, j));
    total = add(total, parts.back());
  }
  if (!(total == from_quasipolynomial(q))) throw CrossCheckFailure("coefficientwise split does not sum to f_q");
  return parts;
}

}  // namespace quasiper
