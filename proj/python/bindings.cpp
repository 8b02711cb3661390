#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "agrolattice/commands.hpp"
#include "agrolattice/concepts.hpp"
#include "agrolattice/conformance.hpp"
#include "agrolattice/cube.hpp"
#include "agrolattice/errors.hpp"
#include "agrolattice/io.hpp"
#include "agrolattice/lattice.hpp"
#include "agrolattice/output.hpp"
#include "agrolattice/rules.hpp"

namespace py = pybind11;
using namespace agro;

namespace {

using Names = std::vector<std::string>;
using NamedTriple = std::tuple<Names, Names, Names>;

NamedTriple to_names(const AxisLabels& lb, const AgroTriple& t) {
  return {set_names(lb, Axis::location, t.extent), set_names(lb, Axis::dimension, t.intent),
          set_names(lb, Axis::timestamp, t.times)};
}

std::vector<NamedTriple> to_names(const AxisLabels& lb, const TripleSet& ts) {
  std::vector<NamedTriple> out;
  for (const auto& t : ts) out.push_back(to_names(lb, t));
  return out;
}

DataCube make_cube(const Names& locs, const Names& dims, const Names& times,
                   const std::vector<std::tuple<std::string, std::string, std::string>>& facts) {
  return build_cube(AxisLabels(locs, dims, times), facts);
}

py::dict lattice_dict(const DataCube& cube, bool artificial_bounds) {
  const auto lat = build_lattice(enumerate_agro_triples(cube), LatticeOptions{artificial_bounds});
  py::list nodes;
  for (const auto& t : lat.nodes()) nodes.append(to_names(cube.labels(), t));
  py::dict out;
  out["nodes"] = nodes;
  out["edges"] = lat.hasse().edges;
  out["top"] = lat.artificial_top();
  out["bottom"] = lat.artificial_bottom();
  return out;
}

py::list rules_list(const DataCube& cube, const std::string& min_support, const std::string& min_confidence,
                    const std::string& denominator) {
  RuleOptions opts;
  opts.denominator = parse_denominator(denominator);
  const RuleSet all = generate_rules(cube, enumerate_agro_triples(cube), opts);
  const RuleSet kept = filter_rules(all, Ratio::parse(min_support), Ratio::parse(min_confidence));
  const auto& lb = cube.labels();
  py::list out;
  for (const auto& r : kept)
    out.append(py::make_tuple(set_names(lb, Axis::dimension, r.antecedent), set_names(lb, Axis::dimension, r.consequent),
                              set_names(lb, Axis::timestamp, r.times), py::make_tuple(r.support.num, r.support.den),
                              py::make_tuple(r.confidence.num, r.confidence.den)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed spatio-temporal triples, their lattice and temporal rules";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "AgroError", PyExc_RuntimeError);
  py::register_exception<UnknownLabel>(m, "UnknownLabel", PyExc_KeyError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<DataCube>(m, "Cube")
      .def(py::init(&make_cube), py::arg("locations"), py::arg("dimensions"), py::arg("timestamps"),
           py::arg("facts"))
      .def_static(
          "parse",
          [](const std::string& text, const std::string& format) { return parse_cube(text, parse_format(format)); },
          py::arg("text"), py::arg("format") = "wide-csv")
      .def_static(
          "load",
          [](const std::string& path, const std::string& format, std::optional<std::string> axes) {
            return ingest(path, parse_format(format), axes);
          },
          py::arg("path"), py::arg("format") = "wide-csv", py::arg("axes") = std::nullopt)
      .def_property_readonly("locations", [](const DataCube& c) { return c.labels().locations(); })
      .def_property_readonly("dimensions", [](const DataCube& c) { return c.labels().dimensions(); })
      .def_property_readonly("timestamps", [](const DataCube& c) { return c.labels().timestamps(); })
      .def("contains",
           [](const DataCube& c, const std::string& l, const std::string& d, const std::string& t) {
             const auto& lb = c.labels();
             return c.contains(lb.index_of(Axis::location, l), lb.index_of(Axis::dimension, d),
                               lb.index_of(Axis::timestamp, t));
           })
      .def("__len__", &DataCube::incidence_count)
      .def(
          "export", [](const DataCube& c, const std::string& format) { return export_cube(c, parse_format(format)); },
          py::arg("format"));

  m.def(
      "mine_triples",
      [](const DataCube& c, const std::string& orientation) {
        return to_names(c.labels(), enumerate_agro_triples(reorient(c, parse_orientation(orientation))));
      },
      py::arg("cube"), py::arg("orientation") = "by_time");
  m.def(
      "oracle_triples", [](const DataCube& c) { return to_names(c.labels(), oracle_enumerate(c)); }, py::arg("cube"));
  m.def("build_lattice", &lattice_dict, py::arg("cube"), py::arg("artificial_bounds") = false);
  m.def(
      "lattice_dot",
      [](const DataCube& c, bool artificial_bounds) {
        return format_lattice_dot(c.labels(),
                                  build_lattice(enumerate_agro_triples(c), LatticeOptions{artificial_bounds}));
      },
      py::arg("cube"), py::arg("artificial_bounds") = false);
  m.def("mine_rules", &rules_list, py::arg("cube"), py::arg("min_support") = "0", py::arg("min_confidence") = "0",
        py::arg("denominator") = "locations");
  m.def(
      "orientations_isomorphic",
      [](const DataCube& c) {
        return check_isomorphic(build_lattice(enumerate_agro_triples(reorient(c, Orientation::by_time))),
                                build_lattice(enumerate_agro_triples(reorient(c, Orientation::by_dimension))));
      },
      py::arg("cube"));
  m.def(
      "conformance_json", [](const DataCube& c) { return build_conformance_report(c).to_json(c.labels()); },
      py::arg("cube"));
}
