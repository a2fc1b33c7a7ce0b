#include "mappell/io.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mappell;

namespace {

Rational rat(const std::string &s)
{
    return parse_rational(s);
}

std::vector<Rational> rats(const std::vector<std::string> &v)
{
    std::vector<Rational> out;
    for (const auto &s : v) {
        out.push_back(rat(s));
    }
    return out;
}

std::vector<std::string> strs(std::span<const Rational> v)
{
    std::vector<std::string> out;
    for (const auto &r : v) {
        out.push_back(rational_to_string(r));
    }
    return out;
}

AppellSeed seed_from_dict(const std::string &omega, unsigned arity, unsigned order,
                          const std::map<std::vector<unsigned>, std::string> &coeffs)
{
    AppellSeed seed;
    seed.omega = rat(omega);
    seed.arity = arity;
    seed.order = order;
    for (const auto &[k, v] : coeffs) {
        seed.coeffs.insert_or_assign(MultiIndex(k), rat(v));
    }
    seed.validate();
    return seed;
}

} // namespace

PYBIND11_MODULE(mappell, m)
{
    m.doc() = "Exact multiple Charlier / Delta-omega-Appell polynomials";

    py::class_<FFPoly>(m, "FFPoly",
                       "Polynomial in the falling-factorial basis x^(k,omega); "
                       "all coefficients are exact rationals rendered as 'p/q' strings.")
        .def_property_readonly("omega", [](const FFPoly &p) { return rational_to_string(p.omega()); })
        .def_property_readonly("coeffs", [](const FFPoly &p) { return strs(p.coeffs()); })
        .def_property_readonly("degree", &FFPoly::degree)
        .def("eval", [](const FFPoly &p, const std::string &x) { return rational_to_string(p.eval(rat(x))); })
        .def("to_monomial", [](const FFPoly &p) { return strs(p.to_monomial()); })
        .def("delta", &FFPoly::delta)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__repr__", &FFPoly::to_string);

    m.def("ff_basis", [](unsigned n, const std::string &omega) { return FFPoly::basis(n, rat(omega)); },
          py::arg("n"), py::arg("omega") = "1");
    m.def("from_monomial",
          [](const std::vector<std::string> &coeffs, const std::string &omega) {
              return FFPoly::from_monomial(rats(coeffs), rat(omega));
          },
          py::arg("coeffs"), py::arg("omega") = "1");

    m.def("charlier",
          [](const std::vector<unsigned> &n, const std::vector<std::string> &a) {
              return charlier_explicit(MultiIndex(n), CharlierParams{rats(a)});
          },
          py::arg("n"), py::arg("a"));
    m.def("charlier_genfunc",
          [](const std::vector<unsigned> &n, const std::vector<std::string> &a, unsigned order) {
              return charlier_genfunc(MultiIndex(n), CharlierParams{rats(a)}, order);
          },
          py::arg("n"), py::arg("a"), py::arg("order"));

    m.def("moment",
          [](const std::string &a, const FFPoly &p) {
              return rational_to_string(MomentFunctional(rat(a))(p));
          },
          py::arg("a"), py::arg("p"),
          "Charlier moment functional with e^a divided out: L[x^(k,1)] = a^k.");

    m.def("verify_suite",
          [](const std::string &suite, unsigned max_degree, const std::vector<std::string> &a) {
              SuiteOptions options;
              options.max_degree = max_degree;
              options.a = rats(a);
              const auto records = run_verify_suite(suite, options);
              py::list out;
              for (const auto &r : records) {
                  py::dict d;
                  d["check"] = r.check;
                  d["params"] = r.params;
                  d["verdict"] = r.verdict;
                  if (!r.witness_ff.empty()) {
                      d["witness"] = r.witness_ff;
                  }
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("suite"), py::arg("max_degree"), py::arg("a"));

    m.def("appell_family",
          [](const std::string &omega, unsigned arity, unsigned order,
             const std::map<std::vector<unsigned>, std::string> &coeffs, unsigned max_degree) {
              const AppellFamily family(seed_from_dict(omega, arity, order, coeffs));
              py::dict out;
              for_each_index(arity, std::min(max_degree, order), [&](const MultiIndex &n) {
                  out[py::tuple(py::cast(n.components()))] = family.at(n);
              });
              return out;
          },
          py::arg("omega"), py::arg("arity"), py::arg("order"), py::arg("coeffs"),
          py::arg("max_degree"));

    m.def("charlier_recurrence_table",
          [](const std::vector<std::string> &a, unsigned window) {
              const CharlierParams params{rats(a)};
              const auto coeffs = extract_recurrence(
                  [params](const MultiIndex &n) { return charlier_explicit(n, params); },
                  params.arity(), 0, window);
              py::list rows;
              for (const auto &[idx, e] : coeffs.entries) {
                  py::dict d;
                  d["n"] = idx.components();
                  d["E"] = rational_to_string(e.b);
                  py::list lower;
                  for (const auto &c : e.lower) {
                      lower.append(c ? py::object(py::str(rational_to_string(*c))) : py::none());
                  }
                  d["lower"] = std::move(lower);
                  rows.append(std::move(d));
              }
              return rows;
          },
          py::arg("a"), py::arg("window"));
}
