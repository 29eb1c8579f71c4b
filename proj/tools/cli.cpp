#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "quasiper/analysis.hpp"
#include "quasiper/ehrhart.hpp"
#include "quasiper/error.hpp"
#include "quasiper/genfunc.hpp"
#include "quasiper/json_io.hpp"

namespace quasiper::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text, const char* what) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    cur.erase(std::remove_if(cur.begin(), cur.end(), ::isspace), cur.end());
    if (cur.empty()) throw Error(std::string("empty entry in ") + what + " list \"" + text + "\"");
    parts.push_back(cur);
  }
  if (parts.empty()) throw Error(std::string("empty ") + what + " list");
  return parts;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& s : split_commas(text, what)) {
    Rational r = parse_rational(s);
    if (r.get_den() != 1) throw Error(std::string(what) + " entries must be integers, got \"" + s + "\"");
    out.push_back(to_int64(Integer(r.get_num())));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* what) {
  std::vector<Rational> out;
  for (const auto& s : split_commas(text, what)) out.push_back(parse_rational(s));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
}

std::int64_t point_budget() {
  const char* env = std::getenv("QUASIPER_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultPointBudget;
  Rational r = parse_rational(env);
  if (r.get_den() != 1 || r <= 0) throw Error("QUASIPER_BUDGET must be a positive integer");
  return to_int64(Integer(r.get_num()));
}

std::string list_str(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

// Rows c_j ascending, residues as columns.
void print_table(std::ostream& out, const QuasiPolynomial& q) {
  if (q.is_zero()) {
    out << "zero quasi-polynomial\n";
    return;
  }
  out << "period " << q.period() << ", degree " << q.degree() << '\n';
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"j \\ r"};
  for (std::int64_t r = 0; r < q.period(); ++r) header.push_back(std::to_string(r));
  cells.push_back(header);
  for (int j = 0; j <= q.degree(); ++j) {
    std::vector<std::string> row{"c_" + std::to_string(j)};
    for (const auto& v : q.rows()[static_cast<std::size_t>(j)]) row.push_back(to_string(v));
    cells.push_back(row);
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0)
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      else
        out << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  }
  out << std::right;
}

std::string poles_str(const CyclotomicFactors& poles) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [n, e] : poles) {
    os << (first ? "" : ", ") << n << ':' << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string gf_str(const RationalGF& r) {
  std::ostringstream os;
  os << '(' << to_string(r.numerator() * r.unit()) << ") / (";
  bool first = true;
  for (const auto& [n, e] : r.den_factors()) {
    os << (first ? "" : " * ") << "Phi_" << n;
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '1';
  os << ')';
  return os.str();
}

struct Options {
  bool json = false;
  // ehrhart / count
  std::string p;
  std::string polytope;
  std::int64_t k = -1;
  std::int64_t kmax = -1;
  // convolve
  std::string a, b, a_qp, b_qp;
  // zaslavsky
  std::string alpha, beta;
  bool construct = false;
  bool experimental = false;
  // conjecture
  std::string tuple;
  bool scan = false;
  int min_n = 0;
  int max_n = 4;
  std::int64_t max_a = 6;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool chains_only = false;
  unsigned threads = 1;
  // gf
  std::string num = "1";
  std::string den_exponents, den_poly, den_cyclo, from_qp;
};

int cmd_ehrhart(const Options& o, std::ostream& out) {
  const SimplexSpec spec(parse_int_list(o.p, "p"));
  const QuasiPolynomial q = ehrhart_qp(spec);
  const PeriodProfile profile = minimum_period_profile(q);
  std::vector<std::int64_t> indices;
  for (int j = 0; j <= spec.dimension(); ++j) indices.push_back(simplex_j_index(spec, j));

  int status = kOk;
  Json values = Json::array();
  for (std::int64_t k = 0; k <= o.kmax; ++k) {
    const Rational v = q(k);
    const Integer oracle = denumerant(spec, k);
    const bool ok = v == Rational(oracle);
    if (!ok) status = kCrossCheck;
    values.push_back({{"k", k}, {"qp", to_string(v)}, {"denumerant", oracle.get_str()}, {"agree", ok}});
  }

  if (o.json) {
    Json j{{"p", spec.p()},
           {"qp", to_json(q)},
           {"profile", profile.periods},
           {"minimum_period", profile.lcm},
           {"j_indices", indices}};
    if (o.kmax >= 0) j["values"] = values;
    out << j.dump() << '\n';
  } else {
    out << "simplex p = " << list_str(spec.p()) << ", dimension " << spec.dimension()
        << (spec.is_distinct_chain() ? " (distinct divisor chain)" : "") << '\n';
    print_table(out, q);
    out << "minimum periods: " << list_str(profile.periods) << " (lcm " << profile.lcm << ")\n";
    out << "j-indices:       " << list_str(indices) << '\n';
    if (o.kmax >= 0) {
      out << "k  L(k)  denumerant\n";
      for (const auto& row : values)
        out << row["k"].get<std::int64_t>() << "  " << row["qp"].get<std::string>() << "  "
            << row["denumerant"].get<std::string>() << (row["agree"].get<bool>() ? "" : "  MISMATCH") << '\n';
    }
  }
  return status;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (o.p.empty() == o.polytope.empty()) throw Error("count needs exactly one of --p or --polytope");
  if (o.k < 0) throw Error("count needs --k >= 0");
  Integer count;
  if (!o.p.empty()) {
    count = denumerant(SimplexSpec(parse_int_list(o.p, "p")), o.k);
  } else {
    const HPolytope poly = hpolytope_from_json(read_json_file(o.polytope));
    count = o.k == 0 ? Integer(1) : count_lattice_points(poly, o.k, point_budget());
  }
  if (o.json)
    out << Json{{"k", o.k}, {"count", count.get_str()}}.dump() << '\n';
  else
    out << count.get_str() << '\n';
  return kOk;
}

QuasiPolynomial operand(const std::string& list, const std::string& file, const char* name) {
  if (list.empty() == file.empty())
    throw Error(std::string("convolve needs exactly one of --") + name + " or --" + name + "-qp");
  if (!list.empty()) return ehrhart_qp(SimplexSpec(parse_int_list(list, name)));
  return quasipolynomial_from_json(read_json_file(file));
}

int cmd_convolve(const Options& o, std::ostream& out) {
  const QuasiPolynomial a = operand(o.a, o.a_qp, "a");
  const QuasiPolynomial b = operand(o.b, o.b_qp, "b");
  const QuasiPolynomial c = convolve(a, b);
  const auto pa = minimum_period_profile(a).periods;
  const auto pb = minimum_period_profile(b).periods;
  const auto pc = minimum_period_profile(c).periods;
  if (o.json) {
    out << Json{{"a_profile", pa}, {"b_profile", pb}, {"c", to_json(c)}, {"c_profile", pc}}.dump() << '\n';
  } else {
    out << "A minimum periods: " << list_str(pa) << '\n';
    out << "B minimum periods: " << list_str(pb) << '\n';
    out << "C = A * B\n";
    print_table(out, c);
    out << "C minimum periods: " << list_str(pc) << '\n';
  }
  return kOk;
}

int cmd_zaslavsky(const Options& o, std::ostream& out) {
  const PeriodChain chain{parse_int_list(o.alpha, "alpha"), parse_int_list(o.beta, "beta")};
  const auto bound = zaslavsky_bound(chain.alphas, chain.betas);
  std::vector<std::int64_t> g;
  for (int j = -1; j <= static_cast<int>(chain.alphas.size() + chain.betas.size()) - 2; ++j)
    g.push_back(g_sequence(chain.alphas, chain.betas, j));

  Json j{{"alpha", chain.alphas}, {"beta", chain.betas}, {"g", g}, {"bound", bound}};
  std::ostringstream text;
  text << "g_-1.. : " << list_str(g) << '\n' << "bound  : " << list_str(bound) << '\n';
  if (o.construct || o.experimental) {
    const SharpnessResult r = o.experimental ? sharpness_probe(chain) : sharpness_construction(chain);
    j["report"] = to_json(r.report);
    j["expected"] = r.expected;
    j["experimental"] = o.experimental;
    text << "gamma  : " << list_str(r.report.gamma) << '\n';
    text << "divides: " << (r.report.divides ? "yes" : "NO") << '\n';
    text << "verdict: " << (r.report.equality ? "equality" : "strict") << '\n';
  }
  out << (o.json ? j.dump() + "\n" : text.str());
  return kOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  if (o.scan == !o.tuple.empty()) throw Error("conjecture needs exactly one of --a or --scan");
  if (!o.scan) {
    const ConjectureInstance inst = conjecture_check(parse_int_list(o.tuple, "a"));
    if (o.json) {
      out << to_json(inst).dump() << '\n';
    } else {
      out << "a         : " << list_str(inst.a) << '\n';
      out << "predicted : " << list_str(inst.predicted) << '\n';
      out << "actual    : " << list_str(inst.actual) << '\n';
      out << "verdict   : " << (inst.verdict == Verdict::match ? "match" : "mismatch") << '\n';
    }
    return kOk;
  }
  ScanOptions opts;
  opts.max_n = o.max_n;
  opts.min_n = o.min_n > 0 ? o.min_n : (o.chains_only ? 1 : o.max_n);
  opts.max_a = o.max_a;
  opts.chains_only = o.chains_only;
  opts.samples = o.samples;
  opts.seed = o.seed;
  opts.threads = o.threads;
  const ScanSummary summary = conjecture_scan(opts, [&out](const ConjectureInstance& inst) {
    out << to_json(inst).dump() << '\n' << std::flush;
  });
  if (o.json)
    out << Json{{"checked", summary.checked}, {"mismatches", summary.mismatches}, {"mismatched", summary.mismatched}}.dump()
        << '\n';
  else
    out << "checked " << summary.checked << ", mismatches " << summary.mismatches << '\n';
  return o.chains_only && summary.mismatches > 0 ? kCrossCheck : kOk;
}

int cmd_gf(const Options& o, std::ostream& out) {
  const int sources = !o.den_exponents.empty() + !o.den_poly.empty() + !o.den_cyclo.empty() + !o.from_qp.empty();
  if (sources != 1) throw Error("gf needs exactly one of --den-exponents, --den-poly, --den-cyclo, --from-qp");

  Json j;
  if (!o.from_qp.empty()) {
    const QuasiPolynomial q = quasipolynomial_from_json(read_json_file(o.from_qp));
    const RationalGF r = from_quasipolynomial(q);
    const QuasiPolynomial back = to_quasipolynomial(r);
    if (!same_function(back, q)) throw CrossCheckFailure("gf of the quasi-polynomial does not expand back to it");
    j = Json{{"gf", to_json(r)}, {"poles", to_json(pole_orders(r))}, {"qp", to_json(back)}};
    if (!o.json) {
      out << "gf    : " << gf_str(r) << '\n';
      out << "poles : " << poles_str(pole_orders(r)) << '\n';
    }
  } else {
    const Polynomial num(parse_rational_list(o.num, "numerator"));
    RationalGF r;
    if (!o.den_exponents.empty()) {
      r = RationalGF::from_exponents(num, parse_int_list(o.den_exponents, "exponent"));
    } else if (!o.den_poly.empty()) {
      r = RationalGF::from_polynomials(num, Polynomial(parse_rational_list(o.den_poly, "denominator")));
    } else {
      CyclotomicFactors factors;
      for (const auto& item : split_commas(o.den_cyclo, "cyclotomic")) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw Error("--den-cyclo entries look like n:e, got \"" + item + "\"");
        const auto n = parse_int_list(item.substr(0, colon), "cyclotomic index").front();
        const auto e = parse_int_list(item.substr(colon + 1), "multiplicity").front();
        factors[n] += static_cast<int>(e);
      }
      r = RationalGF(num, factors);
    }
    const RationalGF& red = r.reduced();
    const QuasiPolynomial q = to_quasipolynomial(red);
    j = Json{{"gf", to_json(red)}, {"poles", to_json(pole_orders(red))}, {"qp", to_json(q)}};
    if (!o.json) {
      out << "gf    : " << gf_str(red) << '\n';
      out << "poles : " << poles_str(pole_orders(red)) << '\n';
      print_table(out, q);
      out << "minimum periods: " << list_str(minimum_period_profile(q).periods) << '\n';
    }
  }
  if (o.json) out << j.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quasi-polynomials, their coefficient periods and generating functions"};
  app.require_subcommand(1);
  Options o;

  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomial of the simplex with entries p");
  ehr->add_option("--p", o.p, "comma-separated positive integers p_0,...,p_d")->required();
  ehr->add_option("--kmax", o.kmax, "also tabulate L(k) against the denumerant for k <= kmax");
  ehr->add_flag("--json", o.json);

  auto* cnt = app.add_subcommand("count", "exact lattice-point count of k * P");
  cnt->add_option("--p", o.p, "simplex entries");
  cnt->add_option("--polytope", o.polytope, "polytope JSON file");
  cnt->add_option("--k", o.k, "dilation")->required();
  cnt->add_flag("--json", o.json);

  auto* conv = app.add_subcommand("convolve", "C(k) = sum A(k - m) B(m)");
  conv->add_option("--a", o.a, "simplex entries for A");
  conv->add_option("--b", o.b, "simplex entries for B");
  conv->add_option("--a-qp", o.a_qp, "quasi-polynomial JSON file for A");
  conv->add_option("--b-qp", o.b_qp, "quasi-polynomial JSON file for B");
  conv->add_flag("--json", o.json);

  auto* zas = app.add_subcommand("zaslavsky", "period bounds for a convolution");
  zas->add_option("--alpha", o.alpha, "minimum periods alpha_0,...,alpha_d")->required();
  zas->add_option("--beta", o.beta, "minimum periods beta_0,...,beta_e")->required();
  zas->add_flag("--construct", o.construct, "build the two simplices and check equality");
  zas->add_flag("--experimental", o.experimental, "as --construct under the weaker separate-chain hypothesis; reports only");
  zas->add_flag("--json", o.json);

  auto* conj = app.add_subcommand("conjecture", "compare predicted and actual periods of 1 / prod (1 - x^a_i)");
  conj->add_option("--a", o.tuple, "comma-separated a_1,...,a_n");
  conj->add_flag("--scan", o.scan, "scan many tuples, one JSON line each");
  conj->add_option("--min-n", o.min_n, "smallest tuple length (default: --max-n, or 1 with --chains-only)");
  conj->add_option("--max-n", o.max_n, "largest tuple length")->capture_default_str();
  conj->add_option("--max-a", o.max_a, "largest entry")->capture_default_str();
  conj->add_option("--samples", o.samples, "random sample size instead of full enumeration");
  conj->add_option("--seed", o.seed, "seed for --samples");
  conj->add_option("--threads", o.threads, "worker threads")->capture_default_str();
  conj->add_flag("--chains-only", o.chains_only, "only distinct divisor chains; mismatches fail");
  conj->add_flag("--json", o.json);

  auto* gf = app.add_subcommand("gf", "rational generating functions and their quasi-polynomials");
  gf->add_option("--num", o.num, "numerator coefficients, lowest degree first")->capture_default_str();
  gf->add_option("--den-exponents", o.den_exponents, "a_1,...,a_m for prod (1 - x^a_i)");
  gf->add_option("--den-poly", o.den_poly, "denominator coefficients, lowest degree first");
  gf->add_option("--den-cyclo", o.den_cyclo, "n:e pairs for prod Phi_n^e");
  gf->add_option("--from-qp", o.from_qp, "quasi-polynomial JSON file");
  gf->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (ehr->parsed()) return cmd_ehrhart(o, out);
    if (cnt->parsed()) return cmd_count(o, out);
    if (conv->parsed()) return cmd_convolve(o, out);
    if (zas->parsed()) return cmd_zaslavsky(o, out);
    if (conj->parsed()) return cmd_conjecture(o, out);
    if (gf->parsed()) return cmd_gf(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CrossCheckFailure& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kCrossCheck;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace quasiper::cli
