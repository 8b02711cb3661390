#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "agrolattice/concepts.hpp"
#include "agrolattice/cube.hpp"
#include "agrolattice/rules.hpp"

namespace agro {

/// A published triple, named by axis labels.
struct ReferenceRow {
  std::string id;
  std::vector<std::string> extent;
  std::vector<std::string> intent;
  std::vector<std::string> times;
};

/// Published figures for the bundled toy dataset.
struct ReferenceClaims {
  std::size_t triple_count = 76;
  std::size_t rule_count = 26;
  Ratio min_support{7, 10};
  Ratio min_confidence{8, 10};
  std::vector<ReferenceRow> rows;

  static ReferenceClaims toy();
};

struct RowVerdict {
  std::string id;
  /// False when a name in the row is not a label of the cube.
  bool applicable = false;
  bool matched = false;
  std::string explanation;
  /// Maximal box obtained by closing the row, when it is not itself one.
  std::optional<AgroTriple> closed_triple;
};

struct RuleCounts {
  std::size_t generated = 0;
  std::size_t kept = 0;
};

struct ConformanceReport {
  std::size_t triple_count = 0;
  std::optional<std::size_t> oracle_triple_count;
  std::optional<bool> oracle_agrees;
  std::vector<RowVerdict> rows;
  RuleCounts rules_locations;
  RuleCounts rules_dimensions;
  std::size_t lattice_nodes = 0;
  std::size_t lattice_edges = 0;
  std::size_t flat_lattice_nodes = 0;
  std::size_t flat_lattice_edges = 0;
  /// Exhaustive pairwise bound check; unset above the size limit.
  std::optional<bool> flat_lattice_complete;
  bool orientation_triples_identical = false;
  bool orientation_isomorphic = false;
  ReferenceClaims reference;

  std::string to_json(const AxisLabels& labels) const;
};

struct ConformanceOptions {
  OracleOptions oracle;
  std::size_t completeness_check_limit = 1000;
};

ConformanceReport build_conformance_report(const DataCube& cube, const ReferenceClaims& reference = ReferenceClaims::toy(),
                                           const ConformanceOptions& options = {});

/// Verdict for one reference row against the mined triples.
RowVerdict check_reference_row(const DataCube& cube, const TripleSet& triples, const ReferenceRow& row);

/// Grows a full box along all three axes until no axis can be extended.
AgroTriple close_box(const DataCube& cube, AgroTriple box);

}  // namespace agro
