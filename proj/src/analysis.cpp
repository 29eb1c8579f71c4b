#include "quasiper/analysis.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "quasiper/ehrhart.hpp"
#include "quasiper/error.hpp"
#include "quasiper/genfunc.hpp"

namespace quasiper {

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

void require_periods(std::span<const std::int64_t> v, const char* what) {
  if (v.empty()) throw Error(std::string(what) + " list is empty");
  for (std::int64_t x : v)
    if (x < 1) throw Error(std::string(what) + " entries must be positive");
}

ZaslavskyReport compare_with_bound(const QuasiPolynomial& a, const QuasiPolynomial& b, const QuasiPolynomial& c) {
  ZaslavskyReport report;
  report.alpha = minimum_period_profile(a).periods;
  report.beta = minimum_period_profile(b).periods;
  report.gamma = minimum_period_profile(c).periods;
  report.bound = zaslavsky_bound(report.alpha, report.beta);
  report.gamma.resize(report.bound.size(), 1);  // vanished top coefficients are constant
  for (std::size_t t = 0; t < report.bound.size(); ++t) {
    if (report.bound[t] % report.gamma[t] != 0) report.divides = false;
    if (report.bound[t] != report.gamma[t]) report.equality = false;
  }
  return report;
}

std::vector<std::int64_t> interleaved_expectation(const PeriodChain& chain) {
  const auto d = static_cast<int>(chain.alphas.size()) - 1;
  const auto e = static_cast<int>(chain.betas.size()) - 1;
  std::vector<std::int64_t> expected(static_cast<std::size_t>(d + e + 2));
  for (int j = 0; j <= std::min(d, e); ++j) {
    expected[static_cast<std::size_t>(2 * j)] = chain.betas[static_cast<std::size_t>(j)];
    expected[static_cast<std::size_t>(2 * j + 1)] = chain.alphas[static_cast<std::size_t>(j)];
  }
  for (int j = e + 1; j <= d; ++j) expected[static_cast<std::size_t>(e + j + 1)] = chain.alphas[static_cast<std::size_t>(j)];
  return expected;
}

SharpnessResult run_pipeline(const PeriodChain& chain) {
  SharpnessResult result;
  result.a = ehrhart_qp(SimplexSpec(chain.alphas));
  result.b = ehrhart_qp(SimplexSpec(chain.betas));
  result.c = convolve(result.a, result.b);
  result.report = compare_with_bound(result.a, result.b, result.c);
  if (chain.alphas.size() >= chain.betas.size()) result.expected = interleaved_expectation(chain);
  return result;
}

}  // namespace

std::int64_t g_sequence(std::span<const std::int64_t> alphas, std::span<const std::int64_t> betas, int j) {
  require_periods(alphas, "alpha");
  require_periods(betas, "beta");
  const int d = static_cast<int>(alphas.size()) - 1;
  const int e = static_cast<int>(betas.size()) - 1;
  if (j < -1 || j > d + e) throw Error("g_j needs -1 <= j <= d + e, got j = " + std::to_string(j));
  std::int64_t g = 1;
  for (int i = std::max(0, j - e); i <= std::min(d, j); ++i)
    g = checked_lcm(g, std::gcd(alphas[static_cast<std::size_t>(i)], betas[static_cast<std::size_t>(j - i)]));
  return g;
}

std::vector<std::int64_t> zaslavsky_bound(std::span<const std::int64_t> alphas, std::span<const std::int64_t> betas) {
  require_periods(alphas, "alpha");
  require_periods(betas, "beta");
  const int d = static_cast<int>(alphas.size()) - 1;
  const int e = static_cast<int>(betas.size()) - 1;
  std::vector<std::int64_t> bound;
  for (int t = 0; t <= d + e + 1; ++t) {
    std::int64_t l = g_sequence(alphas, betas, t - 1);
    for (int i = t; i <= d; ++i) l = checked_lcm(l, alphas[static_cast<std::size_t>(i)]);
    for (int i = t; i <= e; ++i) l = checked_lcm(l, betas[static_cast<std::size_t>(i)]);
    bound.push_back(l);
  }
  return bound;
}

ZaslavskyReport check_zaslavsky(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  if (a.is_zero() || b.is_zero()) throw Error("Zaslavsky check needs nonzero quasi-polynomials");
  return compare_with_bound(a, b, convolve(a, b));
}

std::vector<std::string> chain_violations(const PeriodChain& chain) {
  std::vector<std::string> problems;
  if (chain.alphas.empty() || chain.betas.empty()) {
    problems.emplace_back("alpha and beta lists must be nonempty");
    return problems;
  }
  for (auto v : chain.alphas)
    if (v < 1) problems.emplace_back("alpha entries must be positive");
  for (auto v : chain.betas)
    if (v < 1) problems.emplace_back("beta entries must be positive");
  if (!problems.empty()) return problems;
  const int d = static_cast<int>(chain.alphas.size()) - 1;
  const int e = static_cast<int>(chain.betas.size()) - 1;
  if (d < e) {
    problems.emplace_back("need d >= e (alpha list at least as long as beta list)");
    return problems;
  }
  // alpha_d | ... | alpha_e | beta_e | alpha_{e-1} | beta_{e-1} | ... | alpha_0 | beta_0
  std::vector<std::pair<std::string, std::int64_t>> seq;
  for (int i = d; i >= e; --i) seq.emplace_back("alpha_" + std::to_string(i), chain.alphas[static_cast<std::size_t>(i)]);
  seq.emplace_back("beta_" + std::to_string(e), chain.betas[static_cast<std::size_t>(e)]);
  for (int i = e - 1; i >= 0; --i) {
    seq.emplace_back("alpha_" + std::to_string(i), chain.alphas[static_cast<std::size_t>(i)]);
    seq.emplace_back("beta_" + std::to_string(i), chain.betas[static_cast<std::size_t>(i)]);
  }
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const auto& [lname, lval] = seq[i - 1];
    const auto& [rname, rval] = seq[i];
    if (rval % lval != 0)
      problems.push_back(lname + " = " + std::to_string(lval) + " does not divide " + rname + " = " + std::to_string(rval));
    else if (rval == lval)
      problems.push_back(lname + " and " + rname + " are both " + std::to_string(lval) + " (entries must be distinct)");
  }
  return problems;
}

std::vector<std::string> weak_chain_violations(const PeriodChain& chain) {
  std::vector<std::string> problems;
  auto check = [&problems](const std::vector<std::int64_t>& v, const char* name) {
    if (v.empty()) {
      problems.push_back(std::string(name) + " list is empty");
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1) {
        problems.push_back(std::string(name) + " entries must be positive");
        return;
      }
    }
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] % v[i] != 0)
        problems.push_back(std::string(name) + "_" + std::to_string(i) + " = " + std::to_string(v[i]) + " does not divide " +
                           name + "_" + std::to_string(i - 1) + " = " + std::to_string(v[i - 1]));
  };
  check(chain.alphas, "alpha");
  check(chain.betas, "beta");
  if (problems.empty() && chain.alphas.size() < chain.betas.size())
    problems.emplace_back("need d >= e (alpha list at least as long as beta list)");
  return problems;
}

SharpnessResult sharpness_construction(const PeriodChain& chain) {
  const auto problems = chain_violations(chain);
  if (!problems.empty()) {
    std::string msg = "invalid period chain:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(msg);
  }
  SharpnessResult result = run_pipeline(chain);
  const auto& r = result.report;
  if (r.alpha != chain.alphas || r.beta != chain.betas)
    throw CrossCheckFailure("simplex period profiles differ from the chain: alpha " + join(r.alpha) + ", beta " +
                            join(r.beta));
  if (r.gamma != result.expected)
    throw CrossCheckFailure("convolution periods " + join(r.gamma) + " differ from interleaved chain " +
                            join(result.expected));
  if (!r.equality)
    throw CrossCheckFailure("convolution periods " + join(r.gamma) + " differ from the bound " + join(r.bound));
  return result;
}

SharpnessResult sharpness_probe(const PeriodChain& chain) {
  const auto problems = weak_chain_violations(chain);
  if (!problems.empty()) {
    std::string msg = "invalid period lists:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(msg);
  }
  return run_pipeline(chain);
}

std::vector<std::int64_t> conjecture_predict(std::span<const std::int64_t> a) {
  require_periods(a, "a");
  const std::int64_t top = *std::max_element(a.begin(), a.end());
  const auto n = static_cast<std::int64_t>(a.size());
  std::vector<std::int64_t> p(static_cast<std::size_t>(n), 1);
  for (std::int64_t m = 1; m <= top; ++m) {
    const auto b = std::count_if(a.begin(), a.end(), [m](std::int64_t x) { return x % m == 0; });
    // m enters p_j for every j < b_m
    for (std::int64_t j = 0; j < b; ++j) p[static_cast<std::size_t>(j)] = checked_lcm(p[static_cast<std::size_t>(j)], m);
  }
  return p;
}

ConjectureInstance conjecture_check(std::span<const std::int64_t> a) {
  ConjectureInstance inst;
  inst.a.assign(a.begin(), a.end());
  inst.predicted = conjecture_predict(a);
  const QuasiPolynomial q = to_quasipolynomial(RationalGF::from_exponents(Polynomial::constant(1), a));
  inst.actual = minimum_period_profile(q).periods;
  inst.verdict = inst.actual == inst.predicted ? Verdict::match : Verdict::mismatch;
  return inst;
}

bool is_distinct_divisor_chain(std::span<const std::int64_t> a) {
  std::vector<std::int64_t> v(a.begin(), a.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1] || v[i - 1] % v[i] != 0) return false;
  return !v.empty();
}

std::vector<std::vector<std::int64_t>> enumerate_multisets(const ScanOptions& options) {
  if (options.min_n < 1 || options.max_n < options.min_n) throw Error("scan needs 1 <= min_n <= max_n");
  if (options.max_a < 1) throw Error("scan needs max_a >= 1");
  std::vector<std::vector<std::int64_t>> out;
  auto keep = [&](const std::vector<std::int64_t>& v) { return !options.chains_only || is_distinct_divisor_chain(v); };

  if (options.samples > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> size_dist(options.min_n, options.max_n);
    std::uniform_int_distribution<std::int64_t> entry_dist(1, options.max_a);
    std::set<std::pair<std::size_t, std::vector<std::int64_t>>> seen;
    const std::size_t attempts = options.samples * 1000;
    for (std::size_t t = 0; t < attempts && seen.size() < options.samples; ++t) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(size_dist(rng)));
      for (auto& x : v) x = entry_dist(rng);
      std::sort(v.begin(), v.end(), std::greater<>());
      if (keep(v)) seen.emplace(v.size(), std::move(v));
    }
    for (auto& [n, v] : seen) out.push_back(v);
    // set order is (size, lexicographic), already scan order
    return out;
  }

  std::vector<std::int64_t> cur;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t left, std::int64_t cap) {
    if (left == 0) {
      if (keep(cur)) out.push_back(cur);
      return;
    }
    for (std::int64_t x = 1; x <= cap; ++x) {
      cur.push_back(x);
      rec(left - 1, x);
      cur.pop_back();
    }
  };
  for (int n = options.min_n; n <= options.max_n; ++n) rec(static_cast<std::size_t>(n), options.max_a);
  return out;
}

ScanSummary conjecture_scan(const ScanOptions& options, const std::function<void(const ConjectureInstance&)>& sink) {
  const auto tuples = enumerate_multisets(options);
  ScanSummary summary;
  auto record = [&](const ConjectureInstance& inst) {
    ++summary.checked;
    if (inst.verdict == Verdict::mismatch) {
      ++summary.mismatches;
      summary.mismatched.push_back(inst.a);
    }
    if (sink) sink(inst);
  };
  const std::size_t workers = std::max(1U, options.threads);
  if (workers == 1) {
    for (const auto& t : tuples) record(conjecture_check(t));
    return summary;
  }
  // Chunks are computed concurrently and drained in order.
  const std::size_t chunk = workers * 4;
  for (std::size_t start = 0; start < tuples.size(); start += chunk) {
    const std::size_t stop = std::min(tuples.size(), start + chunk);
    std::vector<std::future<ConjectureInstance>> pending;
    for (std::size_t i = start; i < stop; ++i)
      pending.push_back(std::async(std::launch::async, [&tuples, i] { return conjecture_check(tuples[i]); }));
    for (auto& f : pending) record(f.get());
  }
  return summary;
}

}  // namespace quasiper
