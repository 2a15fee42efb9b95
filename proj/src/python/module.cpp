// pybind11 module exposing the main operations through the JSON report layer
// plus a few direct conveniences. All scalars cross the boundary as exact
// rational strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sixlines/report.hpp"

namespace py = pybind11;
using namespace sixlines;

namespace {

py::object json_to_py(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

json py_to_json(const py::object& obj) {
    py::module_ pyjson = py::module_::import("json");
    std::string dumped = py::cast<std::string>(pyjson.attr("dumps")(obj));
    return json::parse(dumped);
}

Configuration config_from_py(const py::object& source) {
    return configuration_from_json(py_to_json(source));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact invariants and elliptic-fibration models of six-line configurations";

    m.def("do_coordinates",
          [](const py::object& source) {
              DOCoordinates d = sixlines::do_coordinates(config_from_py(source));
              py::list t;
              for (const auto& v : d.t) t.append(v.str());
              return py::make_tuple(t, d.r.str());
          },
          py::arg("source"),
          "Dolgachev-Ortland coordinates (t1..t10, R) of a configuration source");

    m.def("j_invariants",
          [](const py::object& source) {
              JInvariants j = j_invariants_of(config_from_py(source));
              py::list out;
              for (const auto& v : {j.j2, j.j3, j.j4, j.j5, j.j6}) out.append(v.str());
              return out;
          },
          py::arg("source"), "the five invariants (J2..J6) of a configuration source");

    m.def("invariants_report",
          [](const py::object& source) { return json_to_py(invariants_report(config_from_py(source))); },
          py::arg("source"));

    m.def("classify_report",
          [](const py::object& source) { return json_to_py(classify_report(config_from_py(source))); },
          py::arg("source"));

    m.def("fibration_report",
          [](const std::string& model, const py::object& source) {
              auto label = fibration_label_from_name(model);
              if (!label) throw py::value_error("unknown model '" + model + "'");
              return json_to_py(fibration_report(*label, config_from_py(source)));
          },
          py::arg("model"), py::arg("source"));

    m.def("params_report",
          [](const py::object& source) { return json_to_py(params_report(config_from_py(source))); },
          py::arg("source"));

    m.def("isogeny_report", [] { return json_to_py(isogeny_report()); });

    m.def("tangent_report",
          [](const std::string& l1, const std::string& l2, const std::string& l3) {
              auto p1 = Rational::parse(l1), p2 = Rational::parse(l2), p3 = Rational::parse(l3);
              if (!p1 || !p2 || !p3) throw py::value_error("expected rational strings");
              return json_to_py(tangent_report(*p1, *p2, *p3));
          },
          py::arg("l1"), py::arg("l2"), py::arg("l3"));

    m.def("verify_all",
          [](std::uint64_t seed, int samples_large, int samples_small) {
              return json_to_py(verify_all_report(seed, samples_large, samples_small));
          },
          py::arg("seed") = 1, py::arg("samples_large") = 200, py::arg("samples_small") = 50);

    m.attr("schema_tag") = kSchemaTag;
}
