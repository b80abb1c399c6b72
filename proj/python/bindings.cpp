#include "tropical/containment.hpp"
#include "tropical/errors.hpp"
#include "tropical/geometry.hpp"
#include "tropical/oracle.hpp"
#include "tropical/poly.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tropical;

namespace {

py::object fraction(const Rational &r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

py::list fractions(const RationalVector &v) {
    py::list out;
    for (const auto &x : v)
        out.append(fraction(x));
    return out;
}

// Anything Fraction() accepts: int, Fraction, "p/q", "0.25", float.
Rational rational_from(const py::handle &obj) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    const auto text = py::str(cls(obj)).cast<std::string>();
    auto r = parse_rational(text);
    if (!r)
        throw py::value_error("not a rational number: " + text);
    return *r;
}

SlopePoint point_from(const py::iterable &xs) {
    SlopePoint p;
    for (auto x : xs)
        p.push_back(rational_from(x));
    return p;
}

py::dict certificate_dict(const VertexCertificate &c) {
    py::dict d;
    d["vertex"] = fractions(c.vertex);
    d["anchor"] = fractions(c.anchor);
    d["t_max"] = c.t_max.is_infinite() ? py::object(py::float_(INFINITY)) : fraction(*c.t_max.finite);
    return d;
}

py::dict report_dict(const ContainmentReport &r) {
    py::dict d;
    d["contained"] = r.contained();
    py::list certs;
    for (const auto &c : r.certificates)
        certs.append(certificate_dict(c));
    d["certificates"] = certs;
    d["t0"] = r.t0 ? fraction(*r.t0) : py::none();
    d["failing_vertex"] = r.failing_vertex ? py::object(fractions(*r.failing_vertex)) : py::none();
    py::list failing;
    for (const auto &v : r.all_failing)
        failing.append(fractions(v));
    d["failing_vertices"] = failing;
    d["witness_searched"] = r.witness_searched;
    d["witness"] = r.witness ? py::object(fractions(*r.witness)) : py::none();
    return d;
}

py::dict newton_dict(const NewtonPolyhedron &p) {
    py::dict d;
    d["n"] = p.num_vars();
    py::list vertices;
    for (const auto &v : p.vertices())
        vertices.append(fractions(v));
    d["vertices"] = vertices;
    py::list facets;
    for (const auto &c : p.constraints()) {
        py::dict f;
        py::list normal;
        for (const auto &x : c.normal)
            normal.append(py::int_(py::str(x.get_str())));
        f["normal"] = normal;
        f["offset"] = fraction(c.offset);
        f["kind"] = c.kind == ConstraintKind::Equality ? "eq" : "ineq";
        facets.append(f);
    }
    d["facets"] = facets;
    d["edges"] = p.edges();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact containment checks for tropical hypersurfaces";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<EmptyPolynomialError>(m, "EmptyPolynomialError", base.ptr());

    py::class_<Polynomial>(m, "Polynomial")
        .def_property_readonly("num_vars", &Polynomial::num_vars)
        .def_property_readonly("monomials",
                               [](const Polynomial &f) {
                                   py::list out;
                                   for (const auto &mono : f.monomials())
                                       out.append(py::make_tuple(py::tuple(py::cast(mono.exponents)),
                                                                 fraction(mono.coefficient)));
                                   return out;
                               })
        .def("__len__", &Polynomial::size)
        .def("evaluate",
             [](const Polynomial &f, const py::iterable &x) {
                 auto e = evaluate(f, point_from(x));
                 return py::make_tuple(fraction(e.value), e.argmin);
             },
             py::arg("x"), "Minimum value and the indices of the monomials attaining it.")
        .def("on_hypersurface",
             [](const Polynomial &f, const py::iterable &x) { return on_hypersurface(f, point_from(x)); },
             py::arg("x"))
        .def("to_text", [](const Polynomial &f) { return to_text(f); })
        .def("to_json", [](const Polynomial &f) { return to_structured(f); })
        .def("__str__", [](const Polynomial &f) { return to_text(f); })
        .def("__repr__", [](const Polynomial &f) { return "Polynomial('" + to_text(f) + "')"; })
        .def("__eq__", [](const Polynomial &a, const Polynomial &b) {
            return a.num_vars() == b.num_vars() && a.monomials() == b.monomials();
        });

    m.def(
        "parse",
        [](const std::string &text, std::optional<std::size_t> n, bool relaxed) {
            return parse_polynomial(text, n, CanonicalizeOptions{.allow_negative_exponents = relaxed});
        },
        py::arg("text"), py::arg("n") = py::none(), py::arg("relaxed") = false,
        "Parse the text grammar or the JSON form.");

    m.def("newton", [](const Polynomial &f) { return newton_dict(newton_polyhedron(f)); }, py::arg("f"));

    m.def(
        "check_containment",
        [](const Polynomial &f, const Polynomial &g, bool witness, bool all_failing) {
            ContainmentReport r;
            {
                py::gil_scoped_release release;
                r = check_containment(f, g, {.search_witness = witness, .all_failing = all_failing});
            }
            return report_dict(r);
        },
        py::arg("f"), py::arg("g"), py::arg("witness") = true, py::arg("all_failing") = false,
        "Decide whether Trop(f) lies inside Trop(g).");

    m.def(
        "oracle_check",
        [](const Polynomial &f, const Polynomial &g, std::size_t samples, std::uint64_t seed) {
            auto v = oracle_check(f, g, samples, seed);
            py::dict d;
            d["exact"] = v.exact;
            d["agrees_contained"] = v.agrees_contained();
            d["counterexample"] = v.counterexample ? py::object(fractions(*v.counterexample)) : py::none();
            return d;
        },
        py::arg("f"), py::arg("g"), py::arg("samples") = 100, py::arg("seed") = 0,
        "Sampling check that does not use Newton polyhedra.");
}
