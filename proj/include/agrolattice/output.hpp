#pragma once

#include <string>

#include "agrolattice/concepts.hpp"
#include "agrolattice/cube.hpp"
#include "agrolattice/lattice.hpp"
#include "agrolattice/rules.hpp"

namespace agro {

/// `A|B` style member list for one axis subset.
std::string join_names(const AxisLabels& labels, Axis axis, const IndexSet& set, const std::string& sep = "|");

/// One line per triple: `extent;intent;times`, members `|`-joined.
std::string format_triples(const AxisLabels& labels, const TripleSet& triples);

/// Hasse diagram as DOT, one edge per covering pair pointing child -> parent.
std::string format_lattice_dot(const AxisLabels& labels, const SpatioTemporalLattice& lattice);
std::string format_lattice_json(const AxisLabels& labels, const SpatioTemporalLattice& lattice);

/// Header `antecedent,consequent,timestamps,support,confidence`; ratios as
/// `p/q (0.dddddd)`.
std::string format_rules_csv(const AxisLabels& labels, const RuleSet& rules);

}  // namespace agro
