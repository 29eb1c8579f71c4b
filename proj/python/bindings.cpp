#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "quasiper/analysis.hpp"
#include "quasiper/ehrhart.hpp"
#include "quasiper/error.hpp"
#include "quasiper/genfunc.hpp"
#include "quasiper/json_io.hpp"

namespace py = pybind11;
using namespace quasiper;

namespace {

py::object to_fraction(const Rational& r) {
  // Leaked so it is never released after interpreter shutdown.
  static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_string(r));
}

py::int_ to_pyint(const Integer& z) { return py::int_(py::str(z.get_str())); }

// Accepts int, fractions.Fraction or "a/b" strings.
Rational from_py(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

std::vector<Rational> from_py_list(const py::iterable& items) {
  std::vector<Rational> out;
  for (auto item : items) out.push_back(from_py(item));
  return out;
}

py::list rows_to_py(const QuasiPolynomial& q) {
  py::list rows;
  for (const auto& row : q.rows()) {
    py::list r;
    for (const auto& v : row) r.append(to_fraction(v));
    rows.append(r);
  }
  return rows;
}

py::dict report_to_py(const ZaslavskyReport& r) {
  py::dict d;
  d["alpha"] = r.alpha;
  d["beta"] = r.beta;
  d["gamma"] = r.gamma;
  d["bound"] = r.bound;
  d["divides"] = r.divides;
  d["equality"] = r.equality;
  return d;
}

py::dict instance_to_py(const ConjectureInstance& inst) {
  py::dict d;
  d["a"] = inst.a;
  d["predicted"] = inst.predicted;
  d["actual"] = inst.actual;
  d["verdict"] = inst.verdict == Verdict::match ? "match" : "mismatch";
  return d;
}

}  // namespace

PYBIND11_MODULE(_quasiper, m) {
  m.doc() = "Exact quasi-polynomials, minimum periods and cyclotomic generating functions";

  // The module keeps these type objects alive; the translator only borrows them.
  static PyObject* error = py::exception<Error>(m, "QuasiperError", PyExc_ValueError).ptr();
  static PyObject* budget = py::exception<BudgetExceeded>(m, "BudgetExceeded", error).ptr();
  static PyObject* crosscheck = py::exception<CrossCheckFailure>(m, "CrossCheckFailure", error).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      py::set_error(budget, e.what());
    } catch (const CrossCheckFailure& e) {
      py::set_error(crosscheck, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<QuasiPolynomial>(m, "QuasiPolynomial")
      .def(py::init([](std::int64_t period, const std::vector<py::iterable>& rows) {
             std::vector<std::vector<Rational>> table;
             for (const auto& row : rows) table.push_back(from_py_list(row));
             return QuasiPolynomial(period, std::move(table));
           }),
           py::arg("period"), py::arg("coeffs"))
      .def_property_readonly("period", &QuasiPolynomial::period)
      .def_property_readonly("degree", &QuasiPolynomial::degree)
      .def_property_readonly("coeffs", &rows_to_py)
      .def("__call__", [](const QuasiPolynomial& q, std::int64_t k) { return to_fraction(q(k)); })
      .def("minimum_period_profile",
           [](const QuasiPolynomial& q) {
             auto p = minimum_period_profile(q);
             return py::make_tuple(p.periods, p.lcm);
           })
      .def("to_json", [](const QuasiPolynomial& q) { return to_json(q).dump(); })
      .def_static("from_json", [](const std::string& s) { return quasipolynomial_from_json(Json::parse(s)); })
      .def("__eq__", [](const QuasiPolynomial& a, const QuasiPolynomial& b) { return same_function(a, b); })
      .def("__repr__", [](const QuasiPolynomial& q) {
        return "QuasiPolynomial(period=" + std::to_string(q.period()) + ", degree=" + std::to_string(q.degree()) + ")";
      });

  py::class_<RationalGF>(m, "RationalGF")
      .def_static(
          "from_exponents",
          [](const py::iterable& num, const std::vector<std::int64_t>& exps) {
            return RationalGF::from_exponents(Polynomial(from_py_list(num)), exps).reduced();
          },
          py::arg("numerator"), py::arg("exponents"))
      .def_static(
          "from_polynomials",
          [](const py::iterable& num, const py::iterable& den) {
            return RationalGF::from_polynomials(Polynomial(from_py_list(num)), Polynomial(from_py_list(den))).reduced();
          },
          py::arg("numerator"), py::arg("denominator"))
      .def_property_readonly("numerator",
                             [](const RationalGF& r) {
                               py::list out;
                               for (const auto& c : r.reduced().numerator().coefficients()) out.append(to_fraction(c));
                               return out;
                             })
      .def("pole_orders", [](const RationalGF& r) { return pole_orders(r); })
      .def("series",
           [](const RationalGF& r, std::size_t count) {
             py::list out;
             for (const auto& c : r.series(count)) out.append(to_fraction(c));
             return out;
           })
      .def("to_json", [](const RationalGF& r) { return to_json(r.reduced()).dump(); })
      .def("__eq__", [](const RationalGF& a, const RationalGF& b) { return a == b; });

  m.def("denumerant", [](const std::vector<std::int64_t>& p, std::int64_t k) { return to_pyint(denumerant(SimplexSpec(p), k)); });
  m.def("interior_denumerant",
        [](const std::vector<std::int64_t>& p, std::int64_t k) { return to_pyint(interior_denumerant(SimplexSpec(p), k)); });
  m.def("ehrhart_series", [](const std::vector<std::int64_t>& p) { return ehrhart_series(SimplexSpec(p)).reduced(); });
  m.def("ehrhart_qp", [](const std::vector<std::int64_t>& p) { return ehrhart_qp(SimplexSpec(p)); });
  m.def("simplex_j_index", [](const std::vector<std::int64_t>& p, int j) { return simplex_j_index(SimplexSpec(p), j); });

  m.def("minimum_period", [](const py::iterable& values) { return minimum_period(PeriodicFunction(from_py_list(values))); });
  m.def(
      "interpolate",
      [](const py::iterable& values, std::int64_t period, int degree_bound) {
        return interpolate(from_py_list(values), period, degree_bound);
      },
      py::arg("values"), py::arg("period"), py::arg("degree_bound"));
  m.def("convolve", &convolve);

  m.def("from_quasipolynomial", &from_quasipolynomial);
  m.def("to_quasipolynomial", &to_quasipolynomial);
  m.def("monomial_gf", [](const py::iterable& values, int power) {
    return monomial_gf(PeriodicFunction(from_py_list(values)), power);
  });
  m.def("multiply", &multiply);

  m.def("count_lattice_points", [](const std::string& polytope_json, std::int64_t k) {
    return to_pyint(count_lattice_points(hpolytope_from_json(Json::parse(polytope_json)), k));
  });
  m.def("hpolytope_qp", [](const std::string& polytope_json) { return hpolytope_qp(hpolytope_from_json(Json::parse(polytope_json))); });
  m.def("facet_index", [](const std::string& polytope_json) { return facet_index(hpolytope_from_json(Json::parse(polytope_json))); });
  m.def("vertex_denominator",
        [](const std::string& polytope_json) { return vertex_denominator(hpolytope_from_json(Json::parse(polytope_json))); });

  m.def("g_sequence", [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, int j) { return g_sequence(a, b, j); });
  m.def("zaslavsky_bound", [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) { return zaslavsky_bound(a, b); });
  m.def("check_zaslavsky", [](const QuasiPolynomial& a, const QuasiPolynomial& b) { return report_to_py(check_zaslavsky(a, b)); });
  m.def(
      "sharpness_construction",
      [](const std::vector<std::int64_t>& alphas, const std::vector<std::int64_t>& betas) {
        auto r = sharpness_construction(PeriodChain{alphas, betas});
        py::dict d = report_to_py(r.report);
        d["expected"] = r.expected;
        return d;
      },
      py::arg("alphas"), py::arg("betas"));

  m.def("conjecture_predict", [](const std::vector<std::int64_t>& a) { return conjecture_predict(a); });
  m.def("conjecture_check", [](const std::vector<std::int64_t>& a) { return instance_to_py(conjecture_check(a)); });
  m.def(
      "conjecture_scan",
      [](int max_n, std::int64_t max_a, int min_n, bool chains_only) {
        ScanOptions opts;
        opts.min_n = min_n;
        opts.max_n = max_n;
        opts.max_a = max_a;
        opts.chains_only = chains_only;
        py::list out;
        conjecture_scan(opts, [&out](const ConjectureInstance& inst) { out.append(instance_to_py(inst)); });
        return out;
      },
      py::arg("max_n"), py::arg("max_a"), py::arg("min_n") = 1, py::arg("chains_only") = false);
}
