#include "quasiper/quasipoly.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "quasiper/cyclotomic.hpp"
#include "quasiper/error.hpp"

namespace quasiper {

namespace {

std::int64_t residue(std::int64_t k, std::int64_t period) { return ((k % period) + period) % period; }

// Coefficients (lowest first) of the degree <= xs.size()-1 polynomial through
// the points (xs[t], ys[t]). Newton divided differences, then expansion.
std::vector<Rational> fit_polynomial(const std::vector<std::int64_t>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t t = n - 1; t >= level; --t) {
      ys[t] -= ys[t - 1];
      ys[t] /= make_rational(xs[t] - xs[t - level]);
    }
  }
  std::vector<Rational> poly{ys[n - 1]};
  for (std::size_t t = n - 1; t-- > 0;) {
    // poly <- poly * (x - xs[t]) + ys[t]
    const Rational shift = make_rational(xs[t]);
    poly.emplace_back(0);
    for (std::size_t i = poly.size() - 1; i > 0; --i) {
      poly[i] = poly[i - 1] - shift * poly[i];
    }
    poly[0] = ys[t] - shift * poly[0];
  }
  return poly;
}

}  // namespace

PeriodicFunction::PeriodicFunction(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error("periodic function needs a positive period");
}

const Rational& PeriodicFunction::operator()(std::int64_t k) const { return values_[residue(k, period())]; }

bool PeriodicFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

std::int64_t minimum_period(const PeriodicFunction& f) {
  const std::int64_t n = f.period();
  const auto& v = f.values();
  // Periods of an n-periodic function are closed under gcd, so the smallest
  // one is a divisor of n.
  for (std::int64_t p : divisors(n)) {
    bool ok = true;
    for (std::int64_t r = 0; ok && r + p < n; ++r) ok = v[r] == v[r + p];
    if (ok) return p;
  }
  return n;
}

QuasiPolynomial::QuasiPolynomial(std::int64_t period, std::vector<std::vector<Rational>> rows)
    : period_(period), rows_(std::move(rows)) {
  if (period_ < 1) throw Error("quasi-polynomial period must be positive");
  for (const auto& row : rows_)
    if (static_cast<std::int64_t>(row.size()) != period_)
      throw Error("coefficient row length " + std::to_string(row.size()) + " does not match period " +
                  std::to_string(period_));
  while (!rows_.empty() && std::all_of(rows_.back().begin(), rows_.back().end(), [](const Rational& v) { return v == 0; }))
    rows_.pop_back();
  if (rows_.empty()) period_ = 1;
}

QuasiPolynomial QuasiPolynomial::polynomial(std::vector<Rational> coeffs) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(coeffs.size());
  for (auto& c : coeffs) rows.push_back({std::move(c)});
  return QuasiPolynomial(1, std::move(rows));
}

const Rational& QuasiPolynomial::coefficient(int j, std::int64_t r) const {
  if (j < 0 || j > degree()) throw Error("coefficient index out of range");
  return rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(residue(r, period_))];
}

PeriodicFunction QuasiPolynomial::coefficient_function(int j) const {
  if (j < 0 || j > degree()) throw Error("coefficient index out of range");
  return PeriodicFunction(rows_[static_cast<std::size_t>(j)]);
}

Rational QuasiPolynomial::operator()(std::int64_t k) const {
  if (rows_.empty()) return 0;
  const auto r = static_cast<std::size_t>(residue(k, period_));
  const Integer kk = make_integer(k);
  Rational acc = rows_.back()[r];
  for (std::size_t j = rows_.size() - 1; j-- > 0;) {
    acc *= kk;
    acc += rows_[j][r];
  }
  return acc;
}

QuasiPolynomial QuasiPolynomial::with_period(std::int64_t new_period) const {
  if (new_period < 1 || new_period % period_ != 0) throw Error("new period must be a multiple of the stored period");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<Rational> r(static_cast<std::size_t>(new_period));
    for (std::int64_t i = 0; i < new_period; ++i) r[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i % period_)];
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return {};
  return QuasiPolynomial(new_period, std::move(rows));
}

bool same_function(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  if (a.degree() != b.degree()) return false;
  if (a.is_zero()) return true;
  const std::int64_t l = checked_lcm(a.period(), b.period());
  for (int j = 0; j <= a.degree(); ++j)
    for (std::int64_t r = 0; r < l; ++r)
      if (a.coefficient(j, r) != b.coefficient(j, r)) return false;
  return true;
}

QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t l = checked_lcm(a.period(), b.period());
  const int d = std::max(a.degree(), b.degree());
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(d + 1),
                                          std::vector<Rational>(static_cast<std::size_t>(l)));
  for (int j = 0; j <= d; ++j)
    for (std::int64_t r = 0; r < l; ++r) {
      auto& cell = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
      if (j <= a.degree()) cell += a.coefficient(j, r);
      if (j <= b.degree()) cell += b.coefficient(j, r);
    }
  return QuasiPolynomial(l, std::move(rows));
}

QuasiPolynomial operator*(const Rational& c, const QuasiPolynomial& q) {
  auto rows = q.rows();
  for (auto& row : rows)
    for (auto& v : row) v *= c;
  return QuasiPolynomial(q.period(), std::move(rows));
}

PeriodProfile minimum_period_profile(const QuasiPolynomial& q) {
  PeriodProfile profile;
  for (int j = 0; j <= q.degree(); ++j) {
    const std::int64_t p = minimum_period(q.coefficient_function(j));
    profile.periods.push_back(p);
    profile.lcm = checked_lcm(profile.lcm, p);
  }
  return profile;
}

QuasiPolynomial interpolate(std::span<const Rational> values, std::int64_t period, int degree_bound,
                            std::int64_t first_k) {
  if (period < 1) throw Error("interpolation period must be positive");
  if (degree_bound < 0) throw Error("interpolation degree bound must be non-negative");
  const auto per_class = static_cast<std::int64_t>(degree_bound) + 1;
  if (static_cast<std::int64_t>(values.size()) < period * per_class)
    throw Error("interpolation needs at least period * (degree_bound + 1) samples");

  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(per_class),
                                          std::vector<Rational>(static_cast<std::size_t>(period)));
  std::vector<std::int64_t> xs(static_cast<std::size_t>(per_class));
  std::vector<Rational> ys(static_cast<std::size_t>(per_class));
  for (std::int64_t offset = 0; offset < period; ++offset) {
    for (std::int64_t t = 0; t < per_class; ++t) {
      const std::int64_t i = offset + t * period;
      xs[static_cast<std::size_t>(t)] = first_k + i;
      ys[static_cast<std::size_t>(t)] = values[static_cast<std::size_t>(i)];
    }
    std::vector<Rational> fit = fit_polynomial(xs, ys);
    const auto r = static_cast<std::size_t>(residue(first_k + offset, period));
    for (std::size_t j = 0; j < fit.size(); ++j) rows[j][r] = std::move(fit[j]);
  }
  QuasiPolynomial q(period, std::move(rows));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (q(first_k + static_cast<std::int64_t>(i)) != values[i])
      throw Error("not a quasi-polynomial of claimed period/degree (period " + std::to_string(period) +
                  ", degree " + std::to_string(degree_bound) + ", mismatch at k = " +
                  std::to_string(first_k + static_cast<std::int64_t>(i)) + ")");
  }
  return q;
}

Polynomial generating_numerator(const QuasiPolynomial& q) {
  if (q.is_zero()) return {};
  const std::int64_t m = q.period() * (q.degree() + 1);
  std::vector<Rational> head(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) head[static_cast<std::size_t>(k)] = q(k);
  return Polynomial(std::move(head))
      .times_one_minus_x_pow(static_cast<std::size_t>(q.period()), q.degree() + 1)
      .truncated(static_cast<std::size_t>(m));
}

namespace {

// v * (1 - x^a)^times, trailing zeros dropped.
std::vector<Integer> times_one_minus(std::vector<Integer> v, std::int64_t a, int times) {
  const auto step = static_cast<std::size_t>(a);
  for (int t = 0; t < times; ++t) {
    v.resize(v.size() + step);
    for (std::size_t i = v.size(); i-- > step;) v[i] -= v[i - step];
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Numerator of sum q(k) x^k over (1 - x^P)^(d+1) from the samples q(0), q(1), ...
std::vector<Integer> integer_numerator(const std::vector<Integer>& samples, std::int64_t period, int degree) {
  const auto m = static_cast<std::size_t>(period * (degree + 1));
  auto v = times_one_minus(std::vector<Integer>(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(m)), period,
                           degree + 1);
  if (v.size() > m) v.resize(m);
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<Integer> integer_product(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<Integer> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  return out;
}

}  // namespace

QuasiPolynomial convolve(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::int64_t period = checked_lcm(a.period(), b.period());
  const int degree_bound = a.degree() + b.degree() + 1;
  const auto n = static_cast<std::size_t>(period * (degree_bound + 2));

  // Clear denominators so the O(n^2) sum runs over Z.
  auto integer_samples = [n](const QuasiPolynomial& q, Integer& den) {
    std::vector<Rational> v(n);
    den = 1;
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = q(static_cast<std::int64_t>(k));
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v[k].get_den_mpz_t());
    }
    std::vector<Integer> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = v[k].get_num() * (den / v[k].get_den());
    return out;
  };
  Integer den_a, den_b;
  const std::vector<Integer> sa = integer_samples(a, den_a);
  const std::vector<Integer> sb = integer_samples(b, den_b);
  const Integer den = den_a * den_b;

  std::vector<Rational> values(n);
  Integer acc;
  for (std::size_t k = 0; k < n; ++k) {
    acc = 0;
    for (std::size_t m = 0; m <= k; ++m) mpz_addmul(acc.get_mpz_t(), sa[k - m].get_mpz_t(), sb[m].get_mpz_t());
    values[k] = Rational(acc, den);
    values[k].canonicalize();
  }

  QuasiPolynomial c;
  try {
    c = interpolate(values, period, degree_bound);
  } catch (const Error& e) {
    throw CrossCheckFailure(std::string("convolution did not interpolate: ") + e.what());
  }
  if (c.is_zero()) throw CrossCheckFailure("convolution of nonzero quasi-polynomials vanished");

  // f_C = f_A f_B with the (1 - x^P)^(d+1) denominators cleared, over Z:
  // every sample list is scaled by den (A by den_a, B by den_b).
  std::vector<Integer> sc(n);
  for (std::size_t k = 0; k < n; ++k) sc[k] = values[k].get_num() * (den / values[k].get_den());
  const auto lhs = times_one_minus(times_one_minus(integer_numerator(sc, c.period(), c.degree()), a.period(), a.degree() + 1),
                                   b.period(), b.degree() + 1);
  const auto rhs = times_one_minus(
      integer_product(integer_numerator(sa, a.period(), a.degree()), integer_numerator(sb, b.period(), b.degree())),
      c.period(), c.degree() + 1);
  if (lhs != rhs) throw CrossCheckFailure("convolution violates f_C = f_A * f_B");
  return c;
}

}  // namespace quasiper
