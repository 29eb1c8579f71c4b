// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quasiper/analysis.hpp"
#include "quasiper/cyclotomic.hpp"
#include "quasiper/ehrhart.hpp"
#include "quasiper/error.hpp"
#include "quasiper/genfunc.hpp"

using namespace quasiper;

namespace {

using Tuple = std::vector<std::int64_t>;

Rational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string str(const Tuple& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::int64_t tuple_lcm(const Tuple& p) {
  std::int64_t l = 1;
  for (auto v : p) l = std::lcm(l, v);
  return l;
}

// Exhaustive count of y >= lo with sum p_i y_i = k; independent of the DP.
std::int64_t brute_solutions(const Tuple& p, std::int64_t k, std::int64_t lo) {
  std::function<std::int64_t(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left) -> std::int64_t {
    if (i + 1 == p.size()) return left >= lo * p[i] && left % p[i] == 0 ? 1 : 0;
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

std::vector<Tuple> distinct_chains(std::int64_t top) {
  std::vector<Tuple> out;
  std::function<void(Tuple&)> extend = [&](Tuple& t) {
    out.push_back(t);
    for (std::int64_t v = 1; v < t.back(); ++v) {
      if (t.back() % v != 0) continue;
      t.push_back(v);
      extend(t);
      t.pop_back();
    }
  };
  for (std::int64_t s = 1; s <= top; ++s) {
    Tuple t{s};
    extend(t);
  }
  return out;
}

QuasiPolynomial random_qp(std::mt19937& rng, std::int64_t max_period, int max_degree) {
  std::uniform_int_distribution<std::int64_t> per(1, max_period);
  std::uniform_int_distribution<int> deg(0, max_degree), num(-5, 5), den(1, 3);
  const std::int64_t P = per(rng);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& row : rows)
    for (std::int64_t r = 0; r < P; ++r) row.push_back(R(num(rng), den(rng)));
  if (std::all_of(rows.back().begin(), rows.back().end(), [](const Rational& x) { return x == 0; })) rows.back()[0] = 1;
  return QuasiPolynomial(P, std::move(rows));
}

// Ehrhart quasi-polynomials of the tuple battery, computed once.
const std::map<Tuple, QuasiPolynomial>& simplex_battery() {
  static const std::map<Tuple, QuasiPolynomial> cache = [] {
    std::map<Tuple, QuasiPolynomial> m;
    for (const auto& p : all_tuples(4, 6)) m.emplace(p, ehrhart_qp(SimplexSpec(p)));
    return m;
  }();
  return cache;
}

Outcome criterion1() {
  Outcome o;
  int n = 0;
  for (const auto& p : distinct_chains(12)) {
    const auto profile = minimum_period_profile(ehrhart_qp(SimplexSpec(p))).periods;
    o.expect(profile == p, str(p) + " has profile " + str(profile));
    ++n;
  }
  o.detail = std::to_string(n) + " distinct chains with largest entry <= 12";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t values = 0;
  for (const auto& [p, q] : simplex_battery()) {
    const SimplexSpec s(p);
    const std::int64_t top = 3 * tuple_lcm(p);
    for (std::int64_t k = 0; k <= top; ++k) {
      const Integer d = denumerant(s, k);
      o.expect(q(k) == Rational(d), str(p) + " at k=" + std::to_string(k));
      // The DP itself is checked against plain enumeration on a prefix.
      if (k <= 30) o.expect(d == brute_solutions(p, k, 0), "denumerant " + str(p) + " at k=" + std::to_string(k));
      ++values;
    }
  }
  o.detail = std::to_string(simplex_battery().size()) + " tuples, " + std::to_string(values) + " values";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t values = 0;
  for (const auto& [p, q] : simplex_battery()) {
    const SimplexSpec s(p);
    const Rational sign = (p.size() - 1) % 2 ? -1 : 1;
    for (std::int64_t k = 1; k <= 2 * tuple_lcm(p); ++k) {
      const Integer inner = interior_denumerant(s, k);
      o.expect(q(-k) == sign * Rational(inner), str(p) + " at -" + std::to_string(k));
      if (k <= 30) o.expect(inner == brute_solutions(p, k, 1), "interior " + str(p) + " at k=" + std::to_string(k));
      ++values;
    }
  }
  o.detail = std::to_string(values) + " negative arguments";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t coeffs = 0;
  for (const auto& [p, q] : simplex_battery()) {
    const SimplexSpec s(p);
    const auto periods = minimum_period_profile(q).periods;
    o.expect(periods.size() == p.size(), str(p) + " has wrong degree");
    for (std::size_t j = 0; j < periods.size(); ++j) {
      const auto index = simplex_j_index(s, static_cast<int>(j));
      o.expect(index % periods[j] == 0, str(p) + " j=" + std::to_string(j));
      ++coeffs;
    }
  }
  o.detail = std::to_string(coeffs) + " coefficient functions";
  return o;
}

struct NamedPolytope {
  std::string name;
  HPolytope poly;
};

std::vector<NamedPolytope> polytope_battery() {
  auto segment = [](Rational lo, Rational hi) { return HPolytope({{-1}, {1}}, {-lo, hi}, {{lo}, {hi}}, {0}, {1}); };
  auto triangle = [](Rational t) {
    return HPolytope({{-1, 0}, {0, -1}, {1, 1}}, {R(0), R(0), t}, {{R(0), R(0)}, {t, R(0)}, {R(0), t}}, {0, 0}, {1, 1});
  };
  std::vector<NamedPolytope> out;
  out.push_back({"unit square", HPolytope({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}, {R(0), R(0), R(1), R(1)},
                                          {{R(0), R(0)}, {R(1), R(0)}, {R(0), R(1)}, {R(1), R(1)}}, {0, 0}, {1, 1})});
  out.push_back({"triangle x+y<=1/2", triangle(R(1, 2))});
  out.push_back({"triangle x+y<=3/4", triangle(R(3, 4))});
  out.push_back({"triangle x+3y<=1", HPolytope({{-1, 0}, {0, -1}, {1, 3}}, {R(0), R(0), R(1)},
                                               {{R(0), R(0)}, {R(1), R(0)}, {R(0), R(1, 3)}}, {0, 0}, {1, 1})});
  out.push_back({"square [-1/3,1/3]^2",
                 HPolytope({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}, {R(1, 3), R(1, 3), R(1, 3), R(1, 3)},
                           {{R(-1, 3), R(-1, 3)}, {R(1, 3), R(-1, 3)}, {R(-1, 3), R(1, 3)}, {R(1, 3), R(1, 3)}}, {-1, -1},
                           {1, 1})});
  out.push_back({"segment [0,1/2]", segment(R(0), R(1, 2))});
  out.push_back({"segment [0,2/3]", segment(R(0), R(2, 3))});
  out.push_back({"segment [1/4,3/4]", segment(R(1, 4), R(3, 4))});
  return out;
}

Outcome criterion5() {
  Outcome o;
  std::vector<std::int64_t> indices;
  for (const auto& [name, poly] : polytope_battery()) {
    const auto q = hpolytope_qp(poly);
    const int dim = poly.ambient_dimension();
    const auto periods = minimum_period_profile(q).periods;
    const auto index = facet_index(poly);
    indices.push_back(index);
    o.expect(static_cast<int>(periods.size()) == dim + 1, name + " has degree " + std::to_string(q.degree()));
    if (static_cast<int>(periods.size()) == dim + 1)
      o.expect(periods[static_cast<std::size_t>(dim - 1)] == index,
               name + ": period " + std::to_string(periods[static_cast<std::size_t>(dim - 1)]) + " vs facet index " +
                   std::to_string(index));
    if (name == "triangle x+y<=1/2")
      o.expect(q.coefficient(1, 0) == R(3, 4) && q.coefficient(1, 1) == R(1, 2), "triangle c_1 is not (3/4, 1/2)");
  }
  for (std::int64_t want = 1; want <= 4; ++want)
    o.expect(std::find(indices.begin(), indices.end(), want) != indices.end(),
             "no battery polytope with facet index " + std::to_string(want));
  o.detail = std::to_string(indices.size()) + " H-polytopes, facet indices " + str(indices);
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::size_t cases = 0;
  for (std::int64_t n = 1; n <= 8; ++n) {
    std::vector<PeriodicFunction> fs;
    // Every 0/1 pattern of length n, plus random rational ones.
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      std::vector<Rational> v;
      for (std::int64_t r = 0; r < n; ++r) v.push_back((bits >> r) & 1u);
      fs.emplace_back(v);
    }
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> v;
      for (std::int64_t r = 0; r < n; ++r) v.push_back(R(num(rng), den(rng)));
      fs.emplace_back(v);
    }
    for (const auto& c : fs) {
      if (c.is_zero() || minimum_period(c) != n) continue;
      for (int m = 0; m <= 3; ++m) {
        const auto poles = pole_orders(monomial_gf(c, m));
        std::int64_t l = 1;
        for (const auto& [key, e] : poles) {
          o.expect(n % key == 0, "key " + std::to_string(key) + " does not divide " + std::to_string(n));
          o.expect(e == m + 1, "order " + std::to_string(e) + " for m=" + std::to_string(m));
          l = std::lcm(l, key);
        }
        o.expect(l == n, "lcm of keys " + std::to_string(l) + " for n=" + std::to_string(n));
        ++cases;
      }
    }
  }
  o.detail = std::to_string(cases) + " (c, m) pairs with n <= 8, m <= 3";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::size_t cases = 0;
  for (std::int64_t n = 1; n <= 8; ++n)
    for (int d = 0; d <= 3; ++d)
      for (int rep = 0; rep < 2; ++rep) {
        std::vector<Rational> num(static_cast<std::size_t>((d + 1) * euler_phi(n)));
        for (auto& c : num) c = coef(rng);
        const RationalGF r(Polynomial(num), {{n, d + 1}});
        if (r.is_zero()) continue;
        const auto q = to_quasipolynomial(r);
        for (int j = 0; j <= q.degree(); ++j) {
          const auto cj = q.coefficient_function(j);
          if (!cj.is_zero())
            o.expect(minimum_period(cj) == n, "n=" + std::to_string(n) + " c_" + std::to_string(j) + " has period " +
                                                  std::to_string(minimum_period(cj)));
        }
        ++cases;
      }
  o.expect(cases >= 50, "only " + std::to_string(cases) + " generating functions");
  o.detail = std::to_string(cases) + " generating functions";
  return o;
}

Outcome criterion8() {
  Outcome o;
  // Entry order does not change L, so sorted tuples represent the battery.
  std::vector<std::pair<Tuple, const QuasiPolynomial*>> reps;
  for (const auto& [p, q] : simplex_battery())
    if (p.size() <= 4 && std::is_sorted(p.begin(), p.end(), std::greater<>())) reps.emplace_back(p, &q);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t k = i; k < reps.size(); ++k) {
      const auto r = check_zaslavsky(*reps[i].second, *reps[k].second);
      o.expect(r.divides, str(reps[i].first) + " * " + str(reps[k].first) + " gamma " + str(r.gamma) + " bound " +
                              str(r.bound));
      // The swapped order gives the same gamma against the swapped bound.
      const auto swapped = zaslavsky_bound(r.beta, r.alpha);
      for (std::size_t t = 0; t < r.gamma.size(); ++t)
        o.expect(swapped[t] % r.gamma[t] == 0, "swapped " + str(reps[i].first) + " * " + str(reps[k].first));
      ++pairs;
    }
  o.detail = std::to_string(pairs) + " unordered pairs of " + std::to_string(reps.size()) +
             " multisets (length <= 4, entries <= 6)";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<PeriodChain> chains{{{4, 1}, {8, 2}}, {{16, 4, 1}, {32, 8, 2}}, {{8, 2, 1}, {16, 4}}, {{4, 2, 1}, {8}}};
  for (const auto& c : chains) {
    const auto r = sharpness_construction(c);
    const auto& g = r.report.gamma;
    const int d = static_cast<int>(c.alphas.size()) - 1, e = static_cast<int>(c.betas.size()) - 1;
    const std::string name = "alpha " + str(c.alphas) + " beta " + str(c.betas);
    o.expect(g == r.report.bound, name + ": gamma " + str(g) + " bound " + str(r.report.bound));
    for (int j = 0; j <= e; ++j) {
      o.expect(g[static_cast<std::size_t>(2 * j)] == c.betas[static_cast<std::size_t>(j)], name + " gamma_2j");
      o.expect(g[static_cast<std::size_t>(2 * j + 1)] == c.alphas[static_cast<std::size_t>(j)], name + " gamma_2j+1");
    }
    for (int j = e + 1; j <= d; ++j)
      o.expect(g[static_cast<std::size_t>(e + j + 1)] == c.alphas[static_cast<std::size_t>(j)], name + " gamma_e+j+1");
  }
  o.detail = std::to_string(chains.size()) + " chains including d > e";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937 rng(10);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_qp(rng, 5, 2);
    const auto b = random_qp(rng, 5, 2);
    o.expect(from_quasipolynomial(convolve(a, b)) == multiply(from_quasipolynomial(a), from_quasipolynomial(b)),
             "pair " + std::to_string(t));
  }
  o.detail = "20 random pairs, period <= 5, degree <= 2";
  return o;
}

Outcome criterion11() {
  Outcome o;
  ScanOptions opts;
  opts.min_n = 1;
  opts.max_n = 4;
  opts.max_a = 6;
  std::size_t chains = 0, chain_mismatches = 0, verdicts = 0;
  const auto summary = conjecture_scan(opts, [&](const ConjectureInstance& inst) {
    ++verdicts;
    if (is_distinct_divisor_chain(inst.a)) {
      ++chains;
      chain_mismatches += inst.verdict == Verdict::mismatch;
    }
  });
  o.expect(verdicts == summary.checked && verdicts == enumerate_multisets(opts).size(), "verdict count");
  o.expect(chain_mismatches == 0, std::to_string(chain_mismatches) + " chain mismatches");
  o.detail = std::to_string(summary.checked) + " multisets, " + std::to_string(summary.mismatches) +
             " general mismatches (reported), " + std::to_string(chains) + " chains with " +
             std::to_string(chain_mismatches) + " mismatches";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"maximal-period simplex", criterion1},  {"oracle equivalence", criterion2},
      {"reciprocity", criterion3},             {"j-index divisibility", criterion4},
      {"second coefficient", criterion5},      {"monomial generating functions", criterion6},
      {"primitive poles force period n", criterion7},
      {"convolution period bound", criterion8},
      {"sharpness", criterion9},               {"convolution is the product", criterion10},
      {"conjecture harness", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
