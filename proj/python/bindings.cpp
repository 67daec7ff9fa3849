#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "abel/parse.hpp"
#include "abel/report.hpp"

namespace py = pybind11;
using namespace abel;

namespace {

py::object json_to_py(const nlohmann::json& j)
{
    switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& v : j) out.append(json_to_py(v));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

Backend backend_from_name(const std::string& name)
{
    if (name == "divisor") return Backend::Divisor;
    if (name == "ideal") return Backend::Ideal;
    if (name == "both") return Backend::Both;
    throw input_error("unknown backend '" + name + "'");
}

py::object solve_py(const std::string& A, const std::string& B, const std::string& backend,
                    std::size_t spair_budget)
{
    AbelEquation eq(parse_poly(A), parse_poly(B));
    SolveOptions opt;
    opt.backend = backend_from_name(backend);
    opt.spair_budget = spair_budget;
    return json_to_py(nlohmann::json::parse(report_to_json(solve_report(eq, opt))));
}

py::object family_py(const std::string& id, const py::dict& params, const std::string& backend)
{
    std::map<std::string, Rational> p;
    for (auto item : params)
        p[py::cast<std::string>(item.first)] = Rational::from_string(py::cast<std::string>(py::str(item.second)));
    AbelEquation eq = named_instance(id, p);
    SolveOptions opt;
    opt.backend = backend_from_name(backend);
    py::dict out;
    out["A"] = format_poly(eq.A);
    out["B"] = format_poly(eq.B);
    out["report"] = json_to_py(nlohmann::json::parse(report_to_json(solve_report(eq, opt))));
    return out;
}

py::dict check_py(const std::string& A, const std::string& B, const std::string& p)
{
    AbelEquation eq(parse_poly(A), parse_poly(B));
    Poly res = condinv_residual(eq, parse_poly(p));
    py::dict out;
    out["residual"] = format_poly(res);
    out["invariant"] = res.is_zero();
    return out;
}

py::dict ideal_py(const std::string& A, const std::string& B, int m, const std::string& ringname)
{
    AbelEquation eq(parse_poly(A), parse_poly(B));
    IdealBasis basis = build_condinv_system(eq, m);
    py::list gens;
    for (const auto& g : basis.generators) gens.append(g.to_string());
    py::dict out;
    out["generators"] = gens;
    out["singular"] = emit_singular(basis, ringname);
    return out;
}

py::list solve_ideal_py(const std::string& A, const std::string& B, int m, std::size_t spair_budget)
{
    AbelEquation eq(parse_poly(A), parse_poly(B));
    BuchbergerOptions opt;
    opt.spair_budget = spair_budget;
    IdealBasis basis = buchberger(build_condinv_system(eq, m), opt);
    ZeroDimSolution sol = solve_zero_dim(basis);
    py::list out;
    for (const auto& pt : sol.points) {
        py::list coords;
        for (const auto& c : pt) coords.append(c.to_string());
        out.append(coords);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact rational solutions and Darboux integrability of x' = A(t)x^3 + B(t)x^2";

    m.def("parse", [](const std::string& s) {
        Poly p = parse_poly(s);
        py::list coeffs;
        for (const auto& c : p.coeffs()) coeffs.append(c.to_string());
        return coeffs;
    }, py::arg("text"), "parse a polynomial in t; returns exact coefficient strings, ascending");

    m.def("format", [](const std::vector<std::string>& coeffs) {
        std::vector<Rational> c;
        for (const auto& s : coeffs) c.push_back(Rational::from_string(s));
        return format_poly(Poly(std::move(c)));
    }, py::arg("coefficients"), "canonical descending-power string from coefficient strings");

    m.def("solve", &solve_py, py::arg("A"), py::arg("B"), py::arg("backend") = "divisor",
          py::arg("spair_budget") = 10000,
          "full report: invariant curves, Darboux basis, Theorem A bound");

    m.def("check", &check_py, py::arg("A"), py::arg("B"), py::arg("p"),
          "invariance residual p*p' - p*B + A and verdict");

    m.def("bound", [](int n, int degB) { return py::int_(py::str(max_curve_bound(n, degB).get_str())); },
          py::arg("n"), py::arg("degB"), "Theorem A bound");

    m.def("family", &family_py, py::arg("id"), py::arg("params") = py::dict(),
          py::arg("backend") = "divisor", "instantiate a named example and solve it");

    m.def("family_ids", [] { return named_instance_ids(); });

    m.def("ideal", &ideal_py, py::arg("A"), py::arg("B"), py::arg("m"), py::arg("ringname") = "r",
          "coefficient ideal generators and the Singular script");

    m.def("solve_ideal", &solve_ideal_py, py::arg("A"), py::arg("B"), py::arg("m"),
          py::arg("spair_budget") = 10000,
          "zero-dimensional solving of the coefficient ideal; exact coordinate strings");

    // translators run newest-first: register the base before the derived
    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<mismatch_error>(m, "MismatchError", PyExc_RuntimeError);
}
