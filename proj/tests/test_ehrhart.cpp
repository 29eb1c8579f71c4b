#include <doctest.h>

#include <bit>
#include <functional>
#include <numeric>

#include "quasiper/ehrhart.hpp"
#include "quasiper/error.hpp"

using namespace quasiper;

namespace {

using Tuple = std::vector<std::int64_t>;

Rational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// Solutions of sum p_i y_i = k with every y_i >= lo, by nested search.
std::int64_t brute_solutions(const Tuple& p, std::int64_t k, std::int64_t lo) {
  std::function<std::int64_t(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left) -> std::int64_t {
    if (i == p.size()) return left == 0 ? 1 : 0;
    std::int64_t total = 0;
    for (std::int64_t y = lo; y * p[i] <= left; ++y) total += go(i + 1, left - y * p[i]);
    return total;
  };
  return k < 0 ? 0 : go(0, k);
}

std::vector<Tuple> all_tuples(std::size_t max_len, std::int64_t max_entry) {
  std::vector<Tuple> out;
  std::function<void(Tuple&)> grow = [&](Tuple& t) {
    if (!t.empty()) out.push_back(t);
    if (t.size() == max_len) return;
    for (std::int64_t v = 1; v <= max_entry; ++v) {
      t.push_back(v);
      grow(t);
      t.pop_back();
    }
  };
  Tuple t;
  grow(t);
  return out;
}

std::int64_t tuple_lcm(const Tuple& p) {
  std::int64_t l = 1;
  for (auto v : p) l = std::lcm(l, v);
  return l;
}

// Smallest t such that every face's affine span, dilated by t, holds an
// integer point: sum_{i in S} p_i y_i = t solvable over the integers. Only
// the residues of the free y_i modulo the last entry matter.
std::int64_t brute_j_index(const Tuple& p, int j) {
  const std::size_t n = p.size();
  std::vector<Tuple> faces;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != j + 1) continue;
    Tuple f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(p[i]);
    faces.push_back(f);
  }
  auto solvable = [](const Tuple& f, std::int64_t t) {
    std::function<bool(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left) -> bool {
      if (i + 1 == f.size()) return left % f[i] == 0;
      for (std::int64_t y = 0; y < f.back(); ++y)
        if (go(i + 1, left - y * f[i])) return true;
      return false;
    };
    return go(0, t);
  };
  for (std::int64_t t = 1;; ++t) {
    bool ok = true;
    for (const auto& f : faces) ok = ok && solvable(f, t);
    if (ok) return t;
  }
}

HPolytope unit_square() {
  return HPolytope({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}, {R(0), R(0), R(1), R(1)},
                   {{R(0), R(0)}, {R(1), R(0)}, {R(0), R(1)}, {R(1), R(1)}}, {0, 0}, {1, 1});
}

HPolytope half_triangle() {
  return HPolytope({{-1, 0}, {0, -1}, {1, 1}}, {R(0), R(0), R(1, 2)}, {{R(0), R(0)}, {R(1, 2), R(0)}, {R(0), R(1, 2)}},
                   {0, 0}, {1, 1});
}

HPolytope segment(Rational lo, Rational hi) {
  return HPolytope({{-1}, {1}}, {-lo, hi}, {{lo}, {hi}}, {0}, {1});
}

struct BatteryEntry {
  const char* name;
  HPolytope poly;
  std::function<std::int64_t(std::int64_t)> closed_form;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::vector<BatteryEntry> battery() {
  std::vector<BatteryEntry> out;
  out.push_back({"unit square", unit_square(), [](std::int64_t k) { return (k + 1) * (k + 1); }});
  out.push_back({"half triangle", half_triangle(), [](std::int64_t k) {
                   const std::int64_t m = k / 2;
                   return (m + 1) * (m + 2) / 2;
                 }});
  out.push_back({"segment [0,2/3]", segment(R(0), R(2, 3)), [](std::int64_t k) { return 2 * k / 3 + 1; }});
  out.push_back({"segment [1/4,3/4]", segment(R(1, 4), R(3, 4)),
                 [](std::int64_t k) { return floor_div(3 * k, 4) - ceil_div(k, 4) + 1; }});
  out.push_back({"segment [0,1/2]", segment(R(0), R(1, 2)), [](std::int64_t k) { return k / 2 + 1; }});
  out.push_back({"thin triangle", HPolytope({{-1, 0}, {0, -1}, {1, 3}}, {R(0), R(0), R(1)},
                                            {{R(0), R(0)}, {R(1), R(0)}, {R(0), R(1, 3)}}, {0, 0}, {1, 1}),
                 [](std::int64_t k) {
                   std::int64_t c = 0;
                   for (std::int64_t y = 0; 3 * y <= k; ++y) c += k - 3 * y + 1;
                   return c;
                 }});
  out.push_back({"three-quarter triangle", HPolytope({{-1, 0}, {0, -1}, {1, 1}}, {R(0), R(0), R(3, 4)},
                                                     {{R(0), R(0)}, {R(3, 4), R(0)}, {R(0), R(3, 4)}}, {0, 0}, {1, 1}),
                 [](std::int64_t k) {
                   const std::int64_t m = 3 * k / 4;
                   return (m + 1) * (m + 2) / 2;
                 }});
  out.push_back({"third square", HPolytope({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}, {R(1, 3), R(1, 3), R(1, 3), R(1, 3)},
                                           {{R(-1, 3), R(-1, 3)}, {R(1, 3), R(-1, 3)}, {R(-1, 3), R(1, 3)}, {R(1, 3), R(1, 3)}},
                                           {-1, -1}, {1, 1}),
                 [](std::int64_t k) {
                   const std::int64_t side = 2 * (k / 3) + 1;
                   return side * side;
                 }});
  return out;
}

}  // namespace

TEST_CASE("SimplexSpec") {
  CHECK(SimplexSpec({12, 6, 2, 1}).is_chain());
  CHECK(SimplexSpec({12, 6, 2, 1}).is_distinct_chain());
  CHECK(SimplexSpec({4, 4, 1}).is_chain());
  CHECK_FALSE(SimplexSpec({4, 4, 1}).is_distinct_chain());
  CHECK_FALSE(SimplexSpec({1, 2}).is_chain());
  CHECK(SimplexSpec({4, 6}).lcm() == 12);
  CHECK(SimplexSpec({4, 6}).sum() == 10);
  CHECK_THROWS_AS(SimplexSpec({}), Error);
  CHECK_THROWS_AS(SimplexSpec({2, 0}), Error);
}

TEST_CASE("denumerant examples") {
  CHECK(denumerant(SimplexSpec({1, 2}), 5) == 3);
  CHECK(denumerant(SimplexSpec({1}), 7) == 1);
  CHECK(denumerant(SimplexSpec({2, 2}), 3) == 0);
  CHECK(denumerant(SimplexSpec({3}), 0) == 1);
  CHECK(denumerant(SimplexSpec({3}), -3) == 0);
}

TEST_CASE("denumerant agrees with exhaustive enumeration") {
  for (const auto& p : all_tuples(3, 5))
    for (std::int64_t k = 0; k <= 25; ++k) CHECK(denumerant(SimplexSpec(p), k) == brute_solutions(p, k, 0));
}

TEST_CASE("interior_denumerant") {
  CHECK(interior_denumerant(SimplexSpec({1, 1}), 3) == 2);
  CHECK(interior_denumerant(SimplexSpec({1, 2}), 2) == 0);
  CHECK(interior_denumerant(SimplexSpec({1}), 1) == 1);
  for (const auto& p : all_tuples(3, 4))
    for (std::int64_t k = 0; k <= 20; ++k) CHECK(interior_denumerant(SimplexSpec(p), k) == brute_solutions(p, k, 1));
}

TEST_CASE("ehrhart_series") {
  CHECK(pole_orders(ehrhart_series(SimplexSpec({1, 1}))) == CyclotomicFactors{{1, 2}});
  CHECK(pole_orders(ehrhart_series(SimplexSpec({1, 2, 4}))) == CyclotomicFactors{{1, 3}, {2, 2}, {4, 1}});
  const auto s3 = ehrhart_series(SimplexSpec({3})).series(10);
  for (std::size_t k = 0; k < s3.size(); ++k) CHECK(s3[k] == (k % 3 == 0 ? 1 : 0));
}

TEST_CASE("ehrhart_qp examples") {
  const auto q21 = ehrhart_qp(SimplexSpec({2, 1}));
  CHECK(q21.rows()[1] == std::vector<Rational>{R(1, 2), R(1, 2)});
  CHECK(q21.rows()[0] == std::vector<Rational>{R(1), R(1, 2)});
  CHECK(minimum_period_profile(q21).periods == Tuple{2, 1});
  CHECK(same_function(ehrhart_qp(SimplexSpec({1, 1})), QuasiPolynomial::polynomial({R(1), R(1)})));
  CHECK(minimum_period_profile(ehrhart_qp(SimplexSpec({12, 6, 2, 1}))).periods == Tuple{12, 6, 2, 1});
}

TEST_CASE("ehrhart_qp matches enumeration and reciprocity") {
  for (const auto& p : all_tuples(3, 6)) {
    CAPTURE(p);
    const auto q = ehrhart_qp(SimplexSpec(p));
    const std::int64_t l = tuple_lcm(p);
    const int d = static_cast<int>(p.size()) - 1;
    for (std::int64_t k = 0; k <= 3 * l; ++k) CHECK(q(k) == brute_solutions(p, k, 0));
    for (std::int64_t k = 1; k <= 2 * l; ++k) CHECK(q(-k) == (d % 2 ? -1 : 1) * brute_solutions(p, k, 1));
  }
}

TEST_CASE("simplex_j_index") {
  const SimplexSpec chain({12, 6, 2, 1});
  CHECK(simplex_j_index(chain, 1) == 6);
  for (int j = 0; j <= 3; ++j) CHECK(simplex_j_index(chain, j) == chain.p()[static_cast<std::size_t>(j)]);
  for (int j = 0; j <= 2; ++j) CHECK(simplex_j_index(SimplexSpec({1, 1, 1}), j) == 1);
  CHECK_THROWS_AS(simplex_j_index(chain, 4), Error);
  CHECK_THROWS_AS(simplex_j_index(chain, -1), Error);
  for (const auto& p : all_tuples(3, 6))
    for (int j = 0; j < static_cast<int>(p.size()); ++j) CHECK(simplex_j_index(SimplexSpec(p), j) == brute_j_index(p, j));
}

TEST_CASE("minimum periods divide j-indices") {
  for (const auto& p : all_tuples(3, 6)) {
    const SimplexSpec s(p);
    const auto profile = minimum_period_profile(ehrhart_qp(s));
    for (std::size_t j = 0; j < profile.periods.size(); ++j)
      CHECK(simplex_j_index(s, static_cast<int>(j)) % profile.periods[j] == 0);
  }
}

TEST_CASE("distinct chains have maximal periods") {
  // Every distinct chain p_d | ... | p_0 with p_0 <= 12, built from the top.
  std::vector<Tuple> chains;
  std::function<void(Tuple&)> extend = [&](Tuple& t) {
    if (t.back() == 1) {
      chains.push_back(t);
    }
    for (std::int64_t v = 1; v < t.back(); ++v) {
      if (t.back() % v != 0) continue;
      t.push_back(v);
      extend(t);
      t.pop_back();
    }
  };
  for (std::int64_t top = 1; top <= 12; ++top) {
    Tuple t{top};
    extend(t);
  }
  // Chains need not end in 1; add every prefix as well.
  std::vector<Tuple> all;
  for (const auto& c : chains)
    for (std::size_t len = 1; len <= c.size(); ++len) all.emplace_back(c.begin(), c.begin() + static_cast<long>(len));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  CHECK(all.size() > 40);
  for (const auto& p : all) {
    CAPTURE(p);
    REQUIRE(SimplexSpec(p).is_distinct_chain());
    CHECK(minimum_period_profile(ehrhart_qp(SimplexSpec(p))).periods == p);
  }
}

TEST_CASE("HPolytope validation") {
  CHECK_THROWS_AS(HPolytope({{1, 0}}, {R(1)}, {{R(2), R(0)}}, {0, 0}, {2, 2}), Error);  // vertex violates A v <= b
  CHECK_THROWS_AS(HPolytope({{1}}, {R(1)}, {{R(1)}}, {0}, {0}), Error);                 // vertex outside box
  CHECK_THROWS_AS(HPolytope({{1, 0, 0, 0}}, {R(1)}, {{R(0), R(0), R(0), R(0)}}, {0, 0, 0, 0}, {1, 1, 1, 1}), Error);
  CHECK_THROWS_AS(HPolytope({{1, 0}}, {R(1), R(2)}, {{R(0), R(0)}}, {0, 0}, {1, 1}), Error);
}

TEST_CASE("count_lattice_points examples") {
  CHECK(count_lattice_points(unit_square(), 3) == 16);
  CHECK(count_lattice_points(half_triangle(), 4) == 6);
  CHECK(count_lattice_points(segment(R(0), R(1, 3)), 2) == 1);
  CHECK_THROWS_AS(count_lattice_points(unit_square(), 0), Error);
}

TEST_CASE("count_lattice_points budget") {
  CHECK_THROWS_WITH_AS(count_lattice_points(unit_square(), 100, 1000), doctest::Contains("10201"), BudgetExceeded);
  CHECK(count_lattice_points(unit_square(), 30, 1000) == 961);
}

TEST_CASE("count_lattice_points matches closed forms") {
  for (const auto& e : battery()) {
    CAPTURE(e.name);
    for (std::int64_t k = 1; k <= 24; ++k) CHECK(count_lattice_points(e.poly, k) == e.closed_form(k));
  }
}

TEST_CASE("hpolytope_qp examples") {
  CHECK(same_function(hpolytope_qp(unit_square()), QuasiPolynomial::polynomial({R(1), R(2), R(1)})));
  const QuasiPolynomial tri(2, {{R(1), R(3, 8)}, {R(3, 4), R(1, 2)}, {R(1, 8), R(1, 8)}});
  CHECK(same_function(hpolytope_qp(half_triangle()), tri));
  const QuasiPolynomial seg(2, {{R(1), R(1, 2)}, {R(1, 2), R(1, 2)}});
  CHECK(same_function(hpolytope_qp(segment(R(0), R(1, 2))), seg));
}

TEST_CASE("hpolytope_qp rejects a wrong vertex list") {
  // The triangle's inequalities with a vertex list claiming denominator 1:
  // the counts are not a quasi-polynomial of period 1.
  const HPolytope lying({{-1, 0}, {0, -1}, {1, 1}}, {R(0), R(0), R(1, 2)}, {{R(0), R(0)}}, {0, 0}, {1, 1});
  CHECK_THROWS_WITH_AS(hpolytope_qp(lying), doctest::Contains("counts not quasi-polynomial with declared period"), Error);
}

TEST_CASE("facet_index and vertex_denominator") {
  CHECK(facet_index(unit_square()) == 1);
  CHECK(facet_index(half_triangle()) == 2);
  CHECK(facet_index(segment(R(0), R(2, 3))) == 3);
  CHECK(vertex_denominator(unit_square()) == 1);
  CHECK(vertex_denominator(half_triangle()) == 2);
  const HPolytope mixed({{-1, 0}, {0, -1}, {2, 3}}, {R(0), R(0), R(1)}, {{R(0), R(0)}, {R(1, 2), R(0)}, {R(0), R(1, 3)}},
                        {0, 0}, {1, 1});
  CHECK(vertex_denominator(mixed) == 6);
  CHECK(facet_index(mixed) == 1);
  const HPolytope fat({{-1, 0}, {0, -1}, {2, 2}}, {R(0), R(0), R(1)}, {{R(0), R(0)}, {R(1, 2), R(0)}, {R(0), R(1, 2)}},
                      {0, 0}, {1, 1});
  CHECK_THROWS_WITH_AS(facet_index(fat), doctest::Contains("primitive"), Error);
}

TEST_CASE("second coefficient period equals the facet index on the battery") {
  for (const auto& e : battery()) {
    CAPTURE(e.name);
    const auto q = hpolytope_qp(e.poly);
    const int dim = e.poly.ambient_dimension();
    REQUIRE(q.degree() == dim);
    const auto profile = minimum_period_profile(q);
    CHECK(profile.periods[static_cast<std::size_t>(dim - 1)] == facet_index(e.poly));
    CHECK(profile.periods[static_cast<std::size_t>(dim)] == 1);
    CHECK(q.coefficient(dim, 0) > 0);
    CHECK(vertex_denominator(e.poly) % profile.lcm == 0);
  }
}
