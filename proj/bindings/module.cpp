#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mcg/classification.hpp"
#include "mcg/coset_table.hpp"
#include "mcg/errors.hpp"
#include "mcg/hyperelliptic.hpp"
#include "mcg/json_render.hpp"
#include "mcg/sphere_actions.hpp"

namespace py = pybind11;

namespace {

mcg::GroupName name_or_throw(const std::string& text) {
  auto name = mcg::parse_group_name(text);
  if (!name) throw std::invalid_argument("unknown group name: " + text);
  return *name;
}

std::vector<std::string> maximal_types(int r, const std::string& mode) {
  mcg::TypesMode m =
      mode == "congruence" ? mcg::TypesMode::Congruence : mcg::TypesMode::Derived;
  std::vector<std::string> out;
  for (const mcg::GroupName& t : mcg::maximal_types(r, m)) out.push_back(t.to_string());
  return out;
}

std::string descriptors_json(int r, const std::string& type) {
  if (type.empty()) return mcg::descriptor_list_json(mcg::enumerate_descriptors(r)).dump();
  auto rot = mcg::rotation_type_of(name_or_throw(type));
  if (!rot) throw std::invalid_argument("not a rotation type: " + type);
  return mcg::descriptor_list_json(mcg::enumerate_descriptors(r, *rot)).dump();
}

std::size_t count_classes(int r, const std::string& iso, const std::string& mode) {
  mcg::CountMode m =
      mode == "closed_form" ? mcg::CountMode::ClosedForm : mcg::CountMode::Enumerative;
  return mcg::count_classes(r, name_or_throw(iso), m);
}

std::string lift_catalog_json(long g, bool verify, std::size_t max_cosets) {
  std::vector<mcg::LiftRecord> records;
  if (verify) {
    for (mcg::LiftName name : mcg::kAllLiftNames)
      if (mcg::admissible(name, g)) records.push_back(mcg::verify_lift(name, g, max_cosets));
  } else {
    records = mcg::lift_catalog(g);
  }
  return mcg::lift_catalog_json(g, records).dump();
}

std::size_t count_maximal_classes(long g, const std::string& mode) {
  mcg::ClassCountMode m =
      mode == "closed_form" ? mcg::ClassCountMode::ClosedForm : mcg::ClassCountMode::Catalog;
  return mcg::count_maximal_classes(g, m);
}

std::size_t todd_coxeter_order(const std::string& presentation, std::size_t max_cosets) {
  return mcg::todd_coxeter(mcg::parse_presentation(presentation), max_cosets).order;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite group actions on the marked sphere and their hyperelliptic lifts";

  m.def("maximal_types", &maximal_types, py::arg("r"), py::arg("mode") = "derived",
        "Names of the maximal finite subgroup types at r");
  m.def("descriptors_json", &descriptors_json, py::arg("r"), py::arg("type") = "",
        "JSON array of action descriptors at r, optionally for one rotation type");
  m.def("class_table_json", [](int r) { return mcg::class_table_json(r).dump(); }, py::arg("r"),
        "JSON class table at r");
  m.def("count_classes", &count_classes, py::arg("r"), py::arg("iso"),
        py::arg("mode") = "enumerative");
  m.def("order_n_element_exists", &mcg::order_n_element_exists, py::arg("r"), py::arg("n"));
  m.def("lift_catalog_json", &lift_catalog_json, py::arg("g"), py::arg("verify") = false,
        py::arg("max_cosets") = mcg::kDefaultMaxCosets);
  m.def("count_maximal_classes", &count_maximal_classes, py::arg("g"),
        py::arg("mode") = "catalog");
  m.def("todd_coxeter_order", &todd_coxeter_order, py::arg("presentation"),
        py::arg("max_cosets") = mcg::kDefaultMaxCosets,
        "Group order of a finite presentation like '<x,y | x^2, y^3, (x*y)^5>'");
}
