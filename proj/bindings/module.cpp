#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "varcomplex/calculus.hpp"
#include "varcomplex/render.hpp"
#include "varcomplex/scenario.hpp"
#include "varcomplex/selfcheck.hpp"
#include "varcomplex/system.hpp"

namespace py = pybind11;
using namespace varcomplex;

namespace {

Style style_of(const std::string& s) {
    if (s == "plain") return Style::Plain;
    if (s == "latex") return Style::Latex;
    if (s == "ast") return Style::Ast;
    throw StructuralError("unknown format '" + s + "'");
}

struct PyForm {
    Form f;
    NameContext ctx;

    std::string render(const std::string& style) const { return render_form(f, ctx, style_of(style)); }
    bool is_zero() const { return f.is_zero(); }
    std::vector<std::pair<int, int>> bidegrees() const {
        std::vector<std::pair<int, int>> out;
        for (const Bidegree& b : f.bidegrees()) out.emplace_back(b.p, b.q);
        return out;
    }
    PyForm project(int p, int q) const { return PyForm{f.project(p, q), ctx}; }
    bool eq(const PyForm& o) const { return f == o.f; }
};

struct PyTrace {
    TraceExpr t;
    NameContext ctx;
    std::string render(const std::string& style) const {
        return render_trace(t, ctx, style_of(style));
    }
    bool is_zero() const { return t.is_zero(); }
    bool eq(const PyTrace& o) const { return t == o.t; }
};

struct PyScenario {
    Scenario sc;

    std::string name() const { return sc.name; }
    bool is_matrix() const { return sc.is_matrix(); }
    int dim() const { return sc.dim(); }

    std::vector<std::string> killing_names() const {
        std::vector<std::string> out;
        if (sc.is_matrix()) return sc.matrix().killings;
        for (const auto& [k, v] : sc.scalar().killings) out.push_back(k);
        return out;
    }

    py::object euler_lagrange() const {
        if (sc.is_matrix()) {
            const auto& ms = sc.matrix().sys;
            return py::cast(
                PyTrace{trace(mf_vertical_diff(ms.L) + mf_horizontal_diff(ms.theta)), sc.names()});
        }
        return py::cast(PyForm{varcomplex::euler_lagrange(sc.scalar().sys), sc.names()});
    }

    py::object symplectic() const {
        if (sc.is_matrix())
            return py::cast(PyTrace{trace(mf_vertical_diff(sc.matrix().sys.theta)), sc.names()});
        return py::cast(PyForm{symplectic_density(sc.scalar().sys), sc.names()});
    }

    py::object momentum(const std::string& killing) const {
        if (sc.is_matrix()) {
            GaugeKilling X(sc.dim());
            (void)killing;
            return py::cast(PyTrace{trace(X.contract(sc.matrix().sys.total())), sc.names()});
        }
        return py::cast(
            PyForm{momentum_map(sc.scalar().sys, sc.scalar().killings.at(killing)), sc.names()});
    }

    bool check_invariance(const std::string& killing) const {
        if (sc.is_matrix()) {
            GaugeKilling X(sc.dim());
            (void)killing;
            return trace(mf_lie_total(X, sc.matrix().sys.total())).is_zero();
        }
        return invariance_check(sc.scalar().sys, sc.scalar().killings.at(killing)).ok;
    }

    bool check_momentum_defining(const std::string& killing) const {
        if (sc.is_matrix()) {
            GaugeKilling X(sc.dim());
            MatrixForm Omega = mf_total_diff(sc.matrix().sys.total());
            MatrixForm J = X.contract(sc.matrix().sys.total());
            (void)killing;
            return trace(X.contract(Omega) + mf_total_diff(J)).is_zero();
        }
        return momentum_defining_check(sc.scalar().sys, sc.scalar().killings.at(killing)).ok;
    }

    bool check_noether(const std::string& a, const std::string& b) const {
        return noether_check(sc.scalar().sys, sc.scalar().killings.at(a),
                             sc.scalar().killings.at(b))
            .ok;
    }

    bool check_hamilton(const std::string& killing) const {
        return hamilton_identity(sc.scalar().sys, sc.scalar().killings.at(killing)).ok;
    }

    std::string scenario_text() const { return render_scenario(sc); }
};

} // namespace

PYBIND11_MODULE(_varcomplex, m) {
    m.doc() = "covariant variational bicomplex engine";

    py::register_exception<StructuralError>(m, "StructuralError");
    py::register_exception<UnsupportedError>(m, "UnsupportedError");
    py::register_exception<ResourceError>(m, "ResourceError");

    py::class_<PyForm>(m, "Form")
        .def("render", &PyForm::render, py::arg("style") = "plain")
        .def("is_zero", &PyForm::is_zero)
        .def("bidegrees", &PyForm::bidegrees)
        .def("project", &PyForm::project)
        .def("__eq__", &PyForm::eq)
        .def("__repr__", [](const PyForm& f) { return f.render("plain"); });

    py::class_<PyTrace>(m, "TraceForm")
        .def("render", &PyTrace::render, py::arg("style") = "plain")
        .def("is_zero", &PyTrace::is_zero)
        .def("__eq__", &PyTrace::eq)
        .def("__repr__", [](const PyTrace& t) { return t.render("plain"); });

    py::class_<PyScenario>(m, "Scenario")
        .def_property_readonly("name", &PyScenario::name)
        .def_property_readonly("dim", &PyScenario::dim)
        .def("is_matrix", &PyScenario::is_matrix)
        .def("killing_names", &PyScenario::killing_names)
        .def("euler_lagrange", &PyScenario::euler_lagrange)
        .def("symplectic", &PyScenario::symplectic)
        .def("momentum", &PyScenario::momentum)
        .def("check_invariance", &PyScenario::check_invariance)
        .def("check_momentum_defining", &PyScenario::check_momentum_defining)
        .def("check_noether", &PyScenario::check_noether)
        .def("check_hamilton", &PyScenario::check_hamilton)
        .def("scenario_text", &PyScenario::scenario_text);

    m.def("scenario_names", &scenario_names);
    m.def(
        "load_scenario",
        [](const std::string& name, int dim) { return PyScenario{load_scenario(name, dim)}; },
        py::arg("name"), py::arg("dim") = 0);
    m.def("parse_scenario", [](const std::string& text) { return PyScenario{parse_scenario(text)}; });
    m.def("selftest", [](int iterations) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& r : run_property_suites(iterations)) out.emplace_back(r.name, r.ok);
        return out;
    });
}
