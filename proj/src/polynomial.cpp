#include "quasiper/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "quasiper/error.hpp"

namespace quasiper {

namespace {

// Lowest common denominator of a coefficient list.
Integer common_denominator(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::vector<Integer> scaled_numerators(const std::vector<Rational>& v, const Integer& den) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& c : v) {
    Integer t = den / c.get_den();
    out.emplace_back(c.get_num() * t);
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<std::int64_t> integer_coeffs) {
  coeffs_.reserve(integer_coeffs.size());
  for (auto c : integer_coeffs) coeffs_.emplace_back(make_rational(c));
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_x_pow(std::size_t a) {
  if (a == 0) return Polynomial{};
  std::vector<Rational> v(a + 1);
  v[0] = 1;
  v[a] = -1;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{0}; }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial{};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Polynomial Polynomial::shifted(std::size_t n) const {
  if (is_zero() || n == 0) return *this;
  std::vector<Rational> v(n);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::truncated(std::size_t n) const {
  if (coeffs_.size() <= n) return *this;
  return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Polynomial Polynomial::times_one_minus_x_pow(std::size_t a, int times) const {
  if (a == 0) return Polynomial{};
  std::vector<Rational> v = coeffs_;
  for (int t = 0; t < times; ++t) {
    v.resize(v.size() + a);
    for (std::size_t i = v.size(); i-- > a;) v[i] -= v[i - a];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

// Multiplies over Z after clearing denominators; mpq products would pay a gcd
// per term.
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  Integer da = common_denominator(a.coeffs_);
  Integer db = common_denominator(b.coeffs_);
  std::vector<Integer> ia = scaled_numerators(a.coeffs_, da);
  std::vector<Integer> ib = scaled_numerators(b.coeffs_, db);
  std::vector<Integer> acc(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j)
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  Integer den = da * db;
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& n : acc) {
    Rational r{n, den};
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return Polynomial(std::move(out));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / bc.back();
  const bool monic = bc.back() == 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db];
    if (q == 0) continue;
    if (!monic) q *= inv_lead;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * bc[i];
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw Error("polynomial division is not exact");
  return qr.quotient;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error("gcd undefined");
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational mag = abs(c[i]);
    bool neg = c[i] < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace quasiper
