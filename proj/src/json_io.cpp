#include "quasiper/json_io.hpp"

#include <string>

#include "quasiper/error.hpp"

namespace quasiper {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw Error("expected a rational as a string or integer, got " + j.dump());
}

std::int64_t int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw Error("expected an integer, got " + j.dump());
    return to_int64(Integer(r.get_num()));
  }
  throw Error("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw Error(std::string("field \"") + name + "\" must be an array");
  return v;
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

std::vector<std::int64_t> ints_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an array of integers, got " + j.dump());
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

}  // namespace

Json to_json(const QuasiPolynomial& q) {
  Json rows = Json::array();
  for (const auto& row : q.rows()) rows.push_back(rationals(row));
  return Json{{"period", q.period()}, {"degree", q.degree()}, {"coeffs", rows}};
}

QuasiPolynomial quasipolynomial_from_json(const Json& j) {
  const std::int64_t period = int_from_json(field(j, "period"));
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : array_field(j, "coeffs")) rows.push_back(rationals_from_json(row));
  QuasiPolynomial q(period, std::move(rows));
  if (j.contains("degree") && int_from_json(j.at("degree")) != q.degree())
    throw Error("declared degree " + j.at("degree").dump() + " does not match the coefficient table");
  return q;
}

Json to_json(const SimplexSpec& s) { return Json{{"p", s.p()}}; }

SimplexSpec simplex_from_json(const Json& j) { return SimplexSpec(ints_from_json(array_field(j, "p"))); }

Json to_json(const HPolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(rationals(v));
  return Json{{"A", p.normals()},
              {"b", rationals(p.rhs())},
              {"vertices", vertices},
              {"box", {{"lo", p.box_lo()}, {"hi", p.box_hi()}}}};
}

HPolytope hpolytope_from_json(const Json& j) {
  std::vector<std::vector<std::int64_t>> normals;
  for (const auto& row : array_field(j, "A")) normals.push_back(ints_from_json(row));
  std::vector<std::vector<Rational>> vertices;
  for (const auto& v : array_field(j, "vertices")) vertices.push_back(rationals_from_json(v));
  const Json& box = field(j, "box");
  return HPolytope(std::move(normals), rationals_from_json(array_field(j, "b")), std::move(vertices),
                   ints_from_json(array_field(box, "lo")), ints_from_json(array_field(box, "hi")));
}

Json to_json(const RationalGF& r) {
  Json factors = Json::array();
  for (const auto& [n, e] : r.den_factors()) factors.push_back({n, e});
  return Json{{"numerator", rationals(r.numerator().coefficients())}, {"den_factors", factors}, {"unit", to_string(r.unit())}};
}

RationalGF gf_from_json(const Json& j) {
  CyclotomicFactors factors;
  for (const auto& pair : array_field(j, "den_factors")) {
    if (!pair.is_array() || pair.size() != 2) throw Error("den_factors entries must be [n, e] pairs");
    factors[int_from_json(pair[0])] += static_cast<int>(int_from_json(pair[1]));
  }
  Rational unit = j.contains("unit") ? rational_from_json(j.at("unit")) : Rational(1);
  return RationalGF(Polynomial(rationals_from_json(array_field(j, "numerator"))), std::move(factors), unit);
}

Json to_json(const CyclotomicFactors& poles) {
  Json out = Json::object();
  for (const auto& [n, e] : poles) out[std::to_string(n)] = e;
  return out;
}

Json to_json(const ConjectureInstance& inst) {
  return Json{{"a", inst.a},
              {"predicted", inst.predicted},
              {"actual", inst.actual},
              {"verdict", inst.verdict == Verdict::match ? "match" : "mismatch"}};
}

Json to_json(const ZaslavskyReport& report) {
  return Json{{"alpha", report.alpha}, {"beta", report.beta},         {"gamma", report.gamma},
              {"bound", report.bound}, {"divides", report.divides}, {"equality", report.equality}};
}

}  // namespace quasiper
