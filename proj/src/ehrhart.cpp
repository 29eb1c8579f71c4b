#include "quasiper/ehrhart.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "quasiper/error.hpp"

namespace quasiper {

namespace {

// ways[s] = denumerant(spec, s) for s = 0 .. limit.
std::vector<Integer> denumerant_table(const SimplexSpec& spec, std::int64_t limit) {
  std::vector<Integer> ways(static_cast<std::size_t>(limit + 1));
  ways[0] = 1;
  for (std::int64_t part : spec.p())
    for (std::int64_t s = part; s <= limit; ++s)
      ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways;
}

std::int64_t denominator_of(const Rational& r) { return to_int64(Integer(r.get_den())); }

}  // namespace

SimplexSpec::SimplexSpec(std::vector<std::int64_t> p) : p_(std::move(p)) {
  if (p_.empty()) throw Error("simplex needs at least one entry");
  for (std::int64_t v : p_)
    if (v < 1) throw Error("simplex entries must be positive integers, got " + std::to_string(v));
}

bool SimplexSpec::is_chain() const {
  for (std::size_t i = 1; i < p_.size(); ++i)
    if (p_[i - 1] % p_[i] != 0) return false;
  return true;
}

bool SimplexSpec::is_distinct_chain() const {
  if (!is_chain()) return false;
  for (std::size_t i = 1; i < p_.size(); ++i)
    if (p_[i - 1] == p_[i]) return false;
  return true;
}

std::int64_t SimplexSpec::sum() const { return std::accumulate(p_.begin(), p_.end(), std::int64_t{0}); }

std::int64_t SimplexSpec::lcm() const {
  std::int64_t l = 1;
  for (std::int64_t v : p_) l = checked_lcm(l, v);
  return l;
}

Integer denumerant(const SimplexSpec& spec, std::int64_t k) {
  if (k < 0) return 0;
  return denumerant_table(spec, k).back();
}

Integer interior_denumerant(const SimplexSpec& spec, std::int64_t k) {
  // y_i >= 1 is y_i' = y_i - 1 >= 0 against k - sum p_i.
  return denumerant(spec, k - spec.sum());
}

RationalGF ehrhart_series(const SimplexSpec& spec) {
  return RationalGF::from_exponents(Polynomial::constant(1), spec.p());
}

QuasiPolynomial ehrhart_qp(const SimplexSpec& spec) {
  QuasiPolynomial q = to_quasipolynomial(ehrhart_series(spec));
  const std::int64_t checked = q.period() * (q.degree() + 2);
  const std::vector<Integer> ways = denumerant_table(spec, checked - 1);
  for (std::int64_t k = 0; k < checked; ++k) {
    if (q(k) != Rational(ways[static_cast<std::size_t>(k)]))
      throw CrossCheckFailure("Ehrhart quasi-polynomial disagrees with the denumerant at k = " + std::to_string(k));
  }
  return q;
}

std::int64_t simplex_j_index(const SimplexSpec& spec, int j) {
  const int n = static_cast<int>(spec.p().size());
  if (j < 0 || j >= n) throw Error("j-index needs 0 <= j <= d, got j = " + std::to_string(j));
  const int size = j + 1;
  std::int64_t index = 1;
  // Walk all size-element subsets as increasing index vectors.
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::int64_t g = 0;
    for (int i : pick) g = std::gcd(g, spec.p()[static_cast<std::size_t>(i)]);
    index = checked_lcm(index, g);
    int pos = size - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < size; ++i) pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
  }
  return index;
}

HPolytope::HPolytope(std::vector<std::vector<std::int64_t>> normals, std::vector<Rational> rhs,
                     std::vector<std::vector<Rational>> vertices, std::vector<std::int64_t> box_lo,
                     std::vector<std::int64_t> box_hi)
    : normals_(std::move(normals)),
      rhs_(std::move(rhs)),
      vertices_(std::move(vertices)),
      box_lo_(std::move(box_lo)),
      box_hi_(std::move(box_hi)) {
  const std::size_t n = box_lo_.size();
  if (n < 1 || n > 3) throw Error("polytope dimension must be 1, 2 or 3");
  if (box_hi_.size() != n) throw Error("box bounds have different lengths");
  for (std::size_t i = 0; i < n; ++i)
    if (box_lo_[i] > box_hi_[i]) throw Error("box lower bound exceeds upper bound");
  if (normals_.size() != rhs_.size()) throw Error("A and b have different numbers of rows");
  for (const auto& row : normals_)
    if (row.size() != n) throw Error("row of A does not match the box dimension");
  if (vertices_.empty()) throw Error("polytope needs at least one vertex");
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const auto& vert = vertices_[v];
    if (vert.size() != n) throw Error("vertex " + std::to_string(v) + " does not match the box dimension");
    for (std::size_t i = 0; i < n; ++i)
      if (vert[i] < box_lo_[i] || vert[i] > box_hi_[i])
        throw Error("vertex " + std::to_string(v) + " lies outside the box");
    for (std::size_t f = 0; f < normals_.size(); ++f) {
      Rational dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += vert[i] * make_integer(normals_[f][i]);
      if (dot > rhs_[f]) throw Error("vertex " + std::to_string(v) + " violates inequality " + std::to_string(f));
    }
  }
}

Integer count_lattice_points(const HPolytope& poly, std::int64_t k, std::int64_t budget) {
  if (k < 1) throw Error("dilation factor must be positive");
  const int n = poly.ambient_dimension();
  std::vector<std::int64_t> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  Integer points = 1;
  for (int i = 0; i < n; ++i) {
    lo[static_cast<std::size_t>(i)] = k * poly.box_lo()[static_cast<std::size_t>(i)];
    hi[static_cast<std::size_t>(i)] = k * poly.box_hi()[static_cast<std::size_t>(i)];
    points *= make_integer(hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)] + 1);
  }
  if (points > make_integer(budget))
    throw BudgetExceeded("counting at k = " + std::to_string(k) + " scans " + points.get_str() +
                         " points, budget is " + std::to_string(budget));

  // a.x <= k num/den  <=>  den (a.x) <= k num
  struct Facet {
    std::vector<std::int64_t> a;
    __int128 den;
    __int128 bound;
  };
  std::vector<Facet> facets;
  for (std::size_t f = 0; f < poly.normals().size(); ++f) {
    const Rational& b = poly.rhs()[f];
    facets.push_back({poly.normals()[f], to_int64(Integer(b.get_den())),
                      static_cast<__int128>(k) * to_int64(Integer(b.get_num()))});
  }

  std::int64_t count = 0;
  std::vector<std::int64_t> x = lo;
  while (true) {
    bool inside = true;
    for (const auto& f : facets) {
      __int128 dot = 0;
      for (int i = 0; i < n; ++i) dot += static_cast<__int128>(f.a[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
      if (dot * f.den > f.bound) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
    int i = 0;
    while (i < n && x[static_cast<std::size_t>(i)] == hi[static_cast<std::size_t>(i)]) {
      x[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
      ++i;
    }
    if (i == n) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return make_integer(count);
}

QuasiPolynomial hpolytope_qp(const HPolytope& poly, std::int64_t budget) {
  const std::int64_t period = vertex_denominator(poly);
  const int degree = poly.ambient_dimension();
  const std::int64_t samples = period * (degree + 2);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t k = 1; k <= samples; ++k) values.emplace_back(count_lattice_points(poly, k, budget));
  try {
    return interpolate(values, period, degree, 1);
  } catch (const Error& e) {
    throw Error(std::string("counts not quasi-polynomial with declared period: ") + e.what());
  }
}

std::int64_t facet_index(const HPolytope& poly) {
  std::int64_t index = 1;
  for (std::size_t f = 0; f < poly.normals().size(); ++f) {
    std::int64_t g = 0;
    for (std::int64_t a : poly.normals()[f]) g = std::gcd(g, a);
    if (g != 1) throw Error("row " + std::to_string(f) + " of A is not a primitive integer vector");
    index = checked_lcm(index, denominator_of(poly.rhs()[f]));
  }
  return index;
}

std::int64_t vertex_denominator(const HPolytope& poly) {
  std::int64_t den = 1;
  for (const auto& v : poly.vertices())
    for (const auto& c : v) den = checked_lcm(den, denominator_of(c));
  return den;
}

}  // namespace quasiper
