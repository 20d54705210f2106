#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "drvkit/cli.hpp"
#include "drvkit/error.hpp"
#include "drvkit/json_io.hpp"

namespace py = pybind11;
using namespace drvkit;

namespace {

using Images = std::optional<std::vector<Element>>;

// pybind11 holders cannot point to const objects.
struct PyGroup {
  GroupPtr ptr;
};
using Coeffs = std::vector<std::string>;

AlgebraEndomorphism make_map(const GroupPtr& group, const Ring& ring, const Images& images) {
  if (!images) return AlgebraEndomorphism::identity(group, ring);
  return AlgebraEndomorphism::lift(GroupHomomorphism(group, group, *images), ring);
}

GroupRingElement make_element(const GroupPtr& group, const Ring& ring, const Coeffs& coeffs) {
  std::vector<Scalar> values;
  for (const auto& c : coeffs) values.push_back(Scalar::parse(c, ring));
  return GroupRingElement::from_coeffs(group, ring, std::move(values));
}

Coeffs element_strings(const GroupRingElement& x) {
  Coeffs out;
  for (const auto& c : x.coeffs()) out.push_back(c.to_string());
  return out;
}

DerivationTable make_table(const GroupPtr& group, const std::string& ring_name, const std::vector<Coeffs>& values,
                           const Images& sigma, const Images& tau) {
  const Ring ring = Ring::parse(ring_name);
  std::vector<GroupRingElement> elements;
  for (const auto& v : values) elements.push_back(make_element(group, ring, v));
  return DerivationTable(make_map(group, ring, sigma), make_map(group, ring, tau), std::move(elements));
}

}  // namespace

PYBIND11_MODULE(_drvkit, m) {
  m.doc() = "Exact (sigma, tau)-derivations of finite group rings";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<MismatchError>(m, "MismatchError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

  py::class_<PyGroup>(m, "Group")
      .def(py::init([](const std::string& name) { return PyGroup{build_group(name)}; }), py::arg("name"))
      .def_static("from_table",
                  [](const std::vector<std::vector<long long>>& table, const std::string& name) {
                    return PyGroup{FiniteGroup::from_table(table, {}, name)};
                  },
                  py::arg("table"), py::arg("name") = "raw")
      .def_property_readonly("order", [](const PyGroup& g) { return g.ptr->order(); })
      .def_property_readonly("name", [](const PyGroup& g) { return g.ptr->name(); })
      .def_property_readonly("identity", [](const PyGroup& g) { return g.ptr->identity(); })
      .def_property_readonly("labels", [](const PyGroup& g) { return g.ptr->labels(); })
      .def_property_readonly("table", [](const PyGroup& g) { return g.ptr->table(); })
      .def("multiply", [](const PyGroup& g, Element a, Element b) { return g.ptr->multiply(a, b); })
      .def("inverse", [](const PyGroup& g, Element a) { return g.ptr->inverse(a); })
      .def("is_abelian", [](const PyGroup& g) { return g.ptr->is_abelian(); })
      .def("conjugacy_classes", [](const PyGroup& g) { return conjugacy_classes(*g.ptr).blocks; })
      .def("__repr__", [](const PyGroup& g) {
        return "<Group " + g.ptr->name() + " of order " + std::to_string(g.ptr->order()) + ">";
      });

  m.def("inner_automorphism", [](const PyGroup& pg, Element s) {
        const GroupPtr& g = pg.ptr; return inner_automorphism(g, s).images(); },
        py::arg("group"), py::arg("s"));
  m.def(
      "twisted_orbits",
      [](const PyGroup& pg, const Images& sigma, const Images& tau) {
        const GroupPtr& g = pg.ptr;
        const auto s = sigma ? GroupHomomorphism(g, g, *sigma) : GroupHomomorphism::identity(g);
        const auto t = tau ? GroupHomomorphism(g, g, *tau) : GroupHomomorphism::identity(g);
        return twisted_orbits(s, t).blocks;
      },
      py::arg("group"), py::arg("sigma") = py::none(), py::arg("tau") = py::none());
  m.def(
      "derivation_basis",
      [](const PyGroup& pg, const std::string& ring, const Images& sigma, const Images& tau) {
        const GroupPtr& g = pg.ptr;
        const Ring r = Ring::parse(ring);
        std::vector<std::vector<Coeffs>> out;
        for (const auto& delta : derivation_space_basis(make_map(g, r, sigma), make_map(g, r, tau))) {
          std::vector<Coeffs> table;
          for (const auto& v : delta.values()) table.push_back(element_strings(v));
          out.push_back(std::move(table));
        }
        return out;
      },
      py::arg("group"), py::arg("ring") = "Q", py::arg("sigma") = py::none(), py::arg("tau") = py::none());
  m.def(
      "inner_dimension",
      [](const PyGroup& pg, const std::string& ring, const Images& sigma, const Images& tau) {
        const GroupPtr& g = pg.ptr;
        const Ring r = Ring::parse(ring);
        return inner_space_dimension(make_map(g, r, sigma), make_map(g, r, tau));
      },
      py::arg("group"), py::arg("ring") = "Q", py::arg("sigma") = py::none(), py::arg("tau") = py::none());
  m.def(
      "inner_derivation",
      [](const PyGroup& pg, const Coeffs& x, const std::string& ring, const Images& sigma, const Images& tau) {
        const GroupPtr& g = pg.ptr;
        const Ring r = Ring::parse(ring);
        std::vector<Coeffs> out;
        const DerivationTable delta = inner_derivation(make_element(g, r, x), make_map(g, r, sigma), make_map(g, r, tau));
        for (const auto& v : delta.values()) {
          out.push_back(element_strings(v));
        }
        return out;
      },
      py::arg("group"), py::arg("x"), py::arg("ring") = "Q", py::arg("sigma") = py::none(), py::arg("tau") = py::none());
  m.def(
      "is_derivation",
      [](const PyGroup& pg, const std::vector<Coeffs>& values, const std::string& ring, const Images& sigma,
         const Images& tau) {
        const GroupPtr& g = pg.ptr; return make_table(g, ring, values, sigma, tau).certified(); },
      py::arg("group"), py::arg("values"), py::arg("ring") = "Q", py::arg("sigma") = py::none(),
      py::arg("tau") = py::none());
  m.def(
      "solve_witness_json",
      [](const PyGroup& pg, const std::vector<Coeffs>& values, const std::string& ring, const Images& sigma,
         const Images& tau) {
        const GroupPtr& g = pg.ptr;
        return witness_report_to_json(solve_inner_witness(make_table(g, ring, values, sigma, tau))).dump();
      },
      py::arg("group"), py::arg("values"), py::arg("ring") = "Q", py::arg("sigma") = py::none(),
      py::arg("tau") = py::none());
  m.def(
      "integralize_json",
      [](const PyGroup& pg, const std::vector<Coeffs>& values, const Images& sigma, const Images& tau) {
        const GroupPtr& g = pg.ptr;
        return pipeline_to_json(integral_witness_pipeline(make_table(g, "Z", values, sigma, tau))).dump();
      },
      py::arg("group"), py::arg("values"), py::arg("sigma") = py::none(), py::arg("tau") = py::none());
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
