#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "agrolattice/cube.hpp"
#include "agrolattice/io.hpp"
#include "agrolattice/rules.hpp"

namespace agro {

enum class Emit { triples, lattice_dot, lattice_json, rules, conformance };

std::string_view emit_name(Emit e);
Emit parse_emit(std::string_view text);

struct RunConfig {
  std::string input;
  InputFormat format = InputFormat::wide_csv;
  /// Axis declaration JSON; fixes label order and allows empty cubes.
  std::optional<std::string> axes;
  Ratio min_support{0, 1};
  Ratio min_confidence{0, 1};
  SupportDenominator support_denominator = SupportDenominator::locations;
  Orientation orientation = Orientation::by_time;
  bool artificial_bounds = false;
  std::optional<std::string> out;
  Emit emit = Emit::triples;

  /// Throws Error when a threshold lies outside [0, 1].
  void validate() const;
};

DataCube load_cube(const RunConfig& cfg);

std::string cmd_mine_triples(const DataCube& cube, const RunConfig& cfg);
/// DOT or JSON depending on cfg.emit.
std::string cmd_build_lattice(const DataCube& cube, const RunConfig& cfg);
std::string cmd_mine_rules(const DataCube& cube, const RunConfig& cfg);
std::string cmd_conformance(const DataCube& cube, const RunConfig& cfg);

/// Loads the input and produces the artifact selected by cfg.emit.
std::string run(const RunConfig& cfg);

}  // namespace agro
