#include "agrolattice/commands.hpp"

#include "agrolattice/concepts.hpp"
#include "agrolattice/conformance.hpp"
#include "agrolattice/errors.hpp"
#include "agrolattice/lattice.hpp"
#include "agrolattice/output.hpp"

namespace agro {

std::string_view emit_name(Emit e) {
  switch (e) {
    case Emit::triples:
      return "triples";
    case Emit::lattice_dot:
      return "lattice-dot";
    case Emit::lattice_json:
      return "lattice-json";
    case Emit::rules:
      return "rules";
    case Emit::conformance:
      return "conformance";
  }
  return "?";
}

Emit parse_emit(std::string_view text) {
  for (Emit e : {Emit::triples, Emit::lattice_dot, Emit::lattice_json, Emit::rules, Emit::conformance})
    if (emit_name(e) == text) return e;
  throw Error("unknown emit target '" + std::string(text) + "'");
}

void RunConfig::validate() const {
  const Ratio one{1, 1};
  if (min_support > one) throw Error("min-support must lie in [0, 1]");
  if (min_confidence > one) throw Error("min-confidence must lie in [0, 1]");
}

DataCube load_cube(const RunConfig& cfg) {
  return reorient(ingest(cfg.input, cfg.format, cfg.axes), cfg.orientation);
}

std::string cmd_mine_triples(const DataCube& cube, const RunConfig&) {
  return format_triples(cube.labels(), enumerate_agro_triples(cube));
}

std::string cmd_build_lattice(const DataCube& cube, const RunConfig& cfg) {
  LatticeOptions opts;
  opts.artificial_bounds = cfg.artificial_bounds;
  const auto lattice = build_lattice(enumerate_agro_triples(cube), opts);
  return cfg.emit == Emit::lattice_json ? format_lattice_json(cube.labels(), lattice)
                                        : format_lattice_dot(cube.labels(), lattice);
}

std::string cmd_mine_rules(const DataCube& cube, const RunConfig& cfg) {
  RuleOptions opts;
  opts.denominator = cfg.support_denominator;
  const RuleSet all = generate_rules(cube, enumerate_agro_triples(cube), opts);
  return format_rules_csv(cube.labels(), filter_rules(all, cfg.min_support, cfg.min_confidence));
}

std::string cmd_conformance(const DataCube& cube, const RunConfig&) {
  return build_conformance_report(cube).to_json(cube.labels());
}

std::string run(const RunConfig& cfg) {
  cfg.validate();
  const DataCube cube = load_cube(cfg);
  switch (cfg.emit) {
    case Emit::triples:
      return cmd_mine_triples(cube, cfg);
    case Emit::lattice_dot:
    case Emit::lattice_json:
      return cmd_build_lattice(cube, cfg);
    case Emit::rules:
      return cmd_mine_rules(cube, cfg);
    case Emit::conformance:
      return cmd_conformance(cube, cfg);
  }
  throw Error("unsupported emit target");
}

}  // namespace agro
