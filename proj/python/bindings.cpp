#include "tableau_orbits/enumerate.hpp"
#include "tableau_orbits/errors.hpp"
#include "tableau_orbits/mdiagram.hpp"
#include "tableau_orbits/orbit.hpp"
#include "tableau_orbits/report_json.hpp"
#include "tableau_orbits/ssyt.hpp"
#include "tableau_orbits/text_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tableau_orbits;

namespace {

using Rows = std::vector<std::vector<int>>;

Method method_arg(const std::string& name) {
    if (auto m = parse_method(name))
        return *m;
    throw py::value_error("unknown method '" + name + "' (expected oracle, fast or both)");
}

SsytMethod ssyt_method_arg(const std::string& name) {
    if (auto m = parse_ssyt_method(name))
        return *m;
    throw py::value_error("unknown method '" + name + "' (expected formula, oracle or both)");
}

Kind kind_arg(const std::string& name) {
    if (auto k = parse_kind(name))
        return *k;
    throw py::value_error("unknown kind '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Promotion orbits of rectangular standard and column semistandard tableaux";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("validate", [](const Rows& rows, const std::string& kind) {
        return validate(Tableau::from_rows(rows), kind_arg(kind));
    }, py::arg("rows"), py::arg("kind") = "standard");

    m.def("promote", [](const Rows& rows, std::uint64_t k) {
        return promote_k(Tableau::from_rows(rows), k).to_rows();
    }, py::arg("rows"), py::arg("k") = 1);

    m.def("psi", [](const Rows& rows) { return psi(Tableau::from_rows(rows)).to_rows(); }, py::arg("rows"));

    m.def("promote_ssyt", [](const Rows& rows, std::uint64_t k) {
        return promote_ssyt_k(Tableau::from_rows(rows), k).to_rows();
    }, py::arg("rows"), py::arg("k") = 1);

    m.def("mdiagram_layers", [](const Rows& rows) {
        const MDiagram diagram = build_mdiagram(Tableau::from_rows(rows));
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& layer : diagram.layers()) {
            out.emplace_back();
            for (const auto& arc : layer.arcs())
                out.back().push_back({arc.a, arc.b});
        }
        return out;
    }, py::arg("rows"));

    m.def("mdiagram_svg", [](const Rows& rows) { return render_svg(build_mdiagram(Tableau::from_rows(rows))); },
          py::arg("rows"));

    m.def("components_json", [](const Rows& rows) {
        return components_json(build_mdiagram(Tableau::from_rows(rows))).dump();
    }, py::arg("rows"));

    m.def("orbit_json", [](const Rows& rows, const std::string& method) {
        return to_json(orbit_length(Tableau::from_rows(rows), method_arg(method))).dump();
    }, py::arg("rows"), py::arg("method") = "fast");

    m.def("ssyt_orbit_json", [](const Rows& rows, const std::string& method, std::optional<std::uint64_t> syt_orbit) {
        const Tableau t = Tableau::from_rows(rows);
        if (syt_orbit)
            return to_json(orbit_length_ssyt(t, syt_orbit)).dump();
        return to_json(orbit_length_ssyt(t, ssyt_method_arg(method))).dump();
    }, py::arg("rows"), py::arg("method") = "formula", py::arg("syt_orbit") = py::none());

    m.def("census_json", [](const std::string& shape, const std::string& method, int limit) {
        return to_json(census(Shape::parse_rectangle(shape), method_arg(method), limit)).dump();
    }, py::arg("shape"), py::arg("method") = "oracle", py::arg("limit") = kDefaultCensusLimit);

    m.def("enumerate_syt", [](const std::string& shape) {
        std::vector<Rows> out;
        for_each_syt(Shape::parse_rectangle(shape), [&](const Tableau& t) { out.push_back(t.to_rows()); });
        return out;
    }, py::arg("shape"));

    m.def("hook_length_count", [](const std::vector<int>& rows) { return hook_length_count(Shape(rows)); },
          py::arg("rows"));

    m.def("parse_tableau", [](const std::string& text) { return parse_tableau(text).to_rows(); }, py::arg("text"));
    m.def("format_tableau", [](const Rows& rows) { return format_tableau(Tableau::from_rows(rows)); },
          py::arg("rows"));
}
