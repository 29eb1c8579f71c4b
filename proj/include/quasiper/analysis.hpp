#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasiper/quasipoly.hpp"

namespace quasiper {

// Convolution periods
// -------------------
//
// Indices follow the convention gamma_j = minimum period of c_j of the
// convolution C = A * B; bound[t] is the divisor predicted for gamma_t,
// t = 0 .. d + e + 1, computed from g_{t-1}.

/// lcm{ gcd(alpha_i, beta_{j-i}) : 0 <= i <= d, 0 <= j - i <= e }, and 1 for j = -1.
std::int64_t g_sequence(std::span<const std::int64_t> alphas, std::span<const std::int64_t> betas, int j);

/// bound[t] = lcm{alpha_t..alpha_d, beta_t..beta_e, g_{t-1}} for t = 0 .. d + e + 1.
std::vector<std::int64_t> zaslavsky_bound(std::span<const std::int64_t> alphas, std::span<const std::int64_t> betas);

struct ZaslavskyReport {
  std::vector<std::int64_t> alpha;  // minimum-period profile of A
  std::vector<std::int64_t> beta;   // minimum-period profile of B
  std::vector<std::int64_t> gamma;  // minimum-period profile of A * B, padded with 1 to d + e + 2
  std::vector<std::int64_t> bound;  // zaslavsky_bound(alpha, beta)
  bool divides = true;              // gamma[t] | bound[t] for every t
  bool equality = true;             // gamma == bound
};

/// Convolves and compares actual periods with the bound. A failed
/// divisibility is reported in `divides`, not thrown.
ZaslavskyReport check_zaslavsky(const QuasiPolynomial& a, const QuasiPolynomial& b);

/// Two period lists for the sharpness construction. Valid when
/// alpha_d | ... | alpha_e | beta_e | alpha_{e-1} | beta_{e-1} | ... | alpha_0 | beta_0
/// with all entries distinct and d >= e.
struct PeriodChain {
  std::vector<std::int64_t> alphas;
  std::vector<std::int64_t> betas;
};

/// Human readable reasons the chain is invalid; empty when valid.
std::vector<std::string> chain_violations(const PeriodChain& chain);

/// Violations of the weaker hypothesis: alphas and betas each a chain on their own.
std::vector<std::string> weak_chain_violations(const PeriodChain& chain);

struct SharpnessResult {
  QuasiPolynomial a;                  // L of the simplex built from alphas
  QuasiPolynomial b;                  // L of the simplex built from betas
  QuasiPolynomial c;                  // their convolution
  ZaslavskyReport report;
  std::vector<std::int64_t> expected;  // beta_0, alpha_0, beta_1, alpha_1, ..., then alpha_{e+1}..alpha_d
};

/// Builds both simplices, convolves, and requires gamma == expected == bound.
/// Throws Error for an invalid chain and CrossCheckFailure if the equalities fail.
SharpnessResult sharpness_construction(const PeriodChain& chain);

/// Same pipeline under the weaker hypothesis. Nothing is asserted beyond
/// weak_chain_violations(chain) being empty; the report says what happened.
SharpnessResult sharpness_probe(const PeriodChain& chain);

// Period conjecture for 1 / prod (1 - x^{a_i})
// --------------------------------------------

/// p_j = lcm{m : #{i : m | a_i} > j}, j = 0 .. n - 1.
std::vector<std::int64_t> conjecture_predict(std::span<const std::int64_t> a);

enum class Verdict { match, mismatch };

struct ConjectureInstance {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> predicted;
  std::vector<std::int64_t> actual;
  Verdict verdict = Verdict::match;
};

ConjectureInstance conjecture_check(std::span<const std::int64_t> a);

/// True when sorted non-increasingly the entries form a chain of distinct divisors.
bool is_distinct_divisor_chain(std::span<const std::int64_t> a);

struct ScanOptions {
  int min_n = 1;
  int max_n = 4;
  std::int64_t max_a = 6;
  bool chains_only = false;
  /// With samples > 0, draw that many random multisets from `seed` instead of enumerating.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct ScanSummary {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::vector<std::int64_t>> mismatched;
};

/// Multisets in scan order: size ascending, then entries (sorted
/// non-increasing) lexicographically ascending.
std::vector<std::vector<std::int64_t>> enumerate_multisets(const ScanOptions& options);

/// Runs conjecture_check over enumerate_multisets(options). `sink` sees every
/// instance in scan order regardless of the thread count.
ScanSummary conjecture_scan(const ScanOptions& options,
                            const std::function<void(const ConjectureInstance&)>& sink = {});

}  // namespace quasiper
