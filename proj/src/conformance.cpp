#include "agrolattice/conformance.hpp"

#include "agrolattice/errors.hpp"
#include "agrolattice/lattice.hpp"
#include "agrolattice/output.hpp"
#include "json.hpp"

namespace agro {

ReferenceClaims ReferenceClaims::toy() {
  ReferenceClaims c;
  c.rows = {
      {"TS_1", {"L1"}, {"J2", "J3", "J4", "J5"}, {"T2", "T4"}},
      {"TS_2", {"L2"}, {"J1", "J2", "J3", "J5"}, {"T2", "T3"}},
      {"TS_3", {"L1", "L7"}, {"J2", "J4", "J5"}, {"T2", "T3"}},
      {"TS_4", {"L2", "L3"}, {"J3", "J5", "J6"}, {"T1"}},
      {"TS_76", {"L1", "L3", "L5", "L8", "L9"}, {"J2", "J4"}, {"T3"}},
  };
  return c;
}

namespace {

bool is_full_box(const DataCube& cube, const AgroTriple& t) {
  const IndexSet mask = cube.box_mask(t.intent, t.times);
  bool ok = true;
  t.extent.for_each([&](std::size_t l) { ok = ok && mask.is_subset_of(cube.flat_row(l)); });
  return ok;
}

std::string describe(const AxisLabels& labels, const AgroTriple& t) {
  return "({" + join_names(labels, Axis::location, t.extent, ", ") + "}, {" +
         join_names(labels, Axis::dimension, t.intent, ", ") + "}, {" +
         join_names(labels, Axis::timestamp, t.times, ", ") + "})";
}

// Every pair has a least upper and greatest lower bound, verified against the
// full up-sets and down-sets.
bool flat_lattice_complete(const ConceptLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<IndexSet> up(n, IndexSet(n));
  std::vector<IndexSet> down(n, IndexSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lattice.leq(i, j)) {
        up[i].insert(j);
        down[j].insert(i);
      }
  const auto& ctx = lattice.context();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const IndexSet ub = up[i] & up[j];
      const IndexSet lb = down[i] & down[j];
      const auto& a = lattice.node(i);
      const auto& b = lattice.node(j);
      const IndexSet join_extent = ctx.close_objects(a.extent | b.extent);
      const IndexSet meet_extent = a.extent & b.extent;
      const std::size_t k = lattice.index_of({join_extent, ctx.up(join_extent)});
      const std::size_t m = lattice.index_of({meet_extent, ctx.up(meet_extent)});
      if (!ub.contains(k) || !ub.is_subset_of(up[k])) return false;
      if (!lb.contains(m) || !lb.is_subset_of(down[m])) return false;
    }
  return true;
}

}  // namespace

AgroTriple close_box(const DataCube& cube, AgroTriple box) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t l = 0; l < cube.num_locations(); ++l) {
      if (box.extent.contains(l)) continue;
      if (cube.box_mask(box.intent, box.times).is_subset_of(cube.flat_row(l))) {
        box.extent.insert(l);
        grew = true;
      }
    }
    for (std::size_t d = 0; d < cube.num_dimensions(); ++d) {
      if (box.intent.contains(d)) continue;
      AgroTriple trial = box;
      trial.intent.insert(d);
      if (is_full_box(cube, trial)) {
        box = std::move(trial);
        grew = true;
      }
    }
    for (std::size_t t = 0; t < cube.num_timestamps(); ++t) {
      if (box.times.contains(t)) continue;
      AgroTriple trial = box;
      trial.times.insert(t);
      if (is_full_box(cube, trial)) {
        box = std::move(trial);
        grew = true;
      }
    }
  }
  return box;
}

RowVerdict check_reference_row(const DataCube& cube, const TripleSet& triples, const ReferenceRow& row) {
  RowVerdict v;
  v.id = row.id;
  const AxisLabels& labels = cube.labels();
  AgroTriple ref;
  try {
    ref = {make_set(labels, Axis::location, row.extent), make_set(labels, Axis::dimension, row.intent),
           make_set(labels, Axis::timestamp, row.times)};
  } catch (const UnknownLabel& e) {
    v.explanation = std::string("not applicable: ") + e.what();
    return v;
  }
  v.applicable = true;
  if (triples.contains(ref)) {
    v.matched = true;
    v.explanation = "present among mined triples";
    return v;
  }
  if (!is_full_box(cube, ref)) {
    v.explanation = "not a full box: some (location, dimension, timestamp) cell of " + describe(labels, ref) +
                    " is absent from the cube";
    return v;
  }

  std::string growth;
  auto note = [&](Axis axis, std::size_t i) {
    if (!growth.empty()) growth += ", ";
    growth += std::string(axis_name(axis)) + " " + labels.names(axis)[i];
  };
  for (std::size_t l = 0; l < cube.num_locations(); ++l) {
    if (ref.extent.contains(l)) continue;
    AgroTriple trial = ref;
    trial.extent.insert(l);
    if (is_full_box(cube, trial)) note(Axis::location, l);
  }
  for (std::size_t d = 0; d < cube.num_dimensions(); ++d) {
    if (ref.intent.contains(d)) continue;
    AgroTriple trial = ref;
    trial.intent.insert(d);
    if (is_full_box(cube, trial)) note(Axis::dimension, d);
  }
  for (std::size_t t = 0; t < cube.num_timestamps(); ++t) {
    if (ref.times.contains(t)) continue;
    AgroTriple trial = ref;
    trial.times.insert(t);
    if (is_full_box(cube, trial)) note(Axis::timestamp, t);
  }
  const AgroTriple closed = close_box(cube, ref);
  v.closed_triple = closed;
  v.explanation = "full box but not maximal: it extends by " + growth + "; the closed triple is " +
                  describe(labels, closed) + (triples.contains(closed) ? ", which is mined" : ", which is not mined");
  return v;
}

ConformanceReport build_conformance_report(const DataCube& cube, const ReferenceClaims& reference,
                                           const ConformanceOptions& options) {
  ConformanceReport r;
  r.reference = reference;

  const TripleSet triples = enumerate_agro_triples(cube);
  r.triple_count = triples.size();
  try {
    const TripleSet oracle = oracle_enumerate(cube, options.oracle);
    r.oracle_triple_count = oracle.size();
    r.oracle_agrees = oracle == triples;
  } catch (const BudgetExceeded&) {
  }

  for (const auto& row : reference.rows) r.rows.push_back(check_reference_row(cube, triples, row));

  for (auto denom : {SupportDenominator::locations, SupportDenominator::dimensions}) {
    RuleOptions ro;
    ro.denominator = denom;
    const RuleSet all = generate_rules(cube, triples, ro);
    const RuleSet kept = filter_rules(all, reference.min_support, reference.min_confidence);
    RuleCounts& counts = denom == SupportDenominator::locations ? r.rules_locations : r.rules_dimensions;
    counts = {all.size(), kept.size()};
  }

  const SpatioTemporalLattice lattice = build_lattice(triples);
  r.lattice_nodes = lattice.size();
  r.lattice_edges = lattice.hasse().edges.size();

  const ConceptLattice flat = flatten_lattice(cube);
  r.flat_lattice_nodes = flat.size();
  r.flat_lattice_edges = flat.hasse().edges.size();
  if (flat.size() <= options.completeness_check_limit) r.flat_lattice_complete = flat_lattice_complete(flat);

  const DataCube other = reorient(cube, cube.orientation() == Orientation::by_time ? Orientation::by_dimension
                                                                                   : Orientation::by_time);
  const TripleSet other_triples = enumerate_agro_triples(other);
  r.orientation_triples_identical = other_triples == triples;
  r.orientation_isomorphic = check_isomorphic(lattice, build_lattice(other_triples));
  return r;
}

std::string ConformanceReport::to_json(const AxisLabels& labels) const {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["dataset"] = {{"locations", labels.locations().size()},
                    {"dimensions", labels.dimensions().size()},
                    {"timestamps", labels.timestamps().size()}};

  ojson tr;
  tr["mined"] = triple_count;
  tr["oracle"] = oracle_triple_count ? ojson(*oracle_triple_count) : ojson(nullptr);
  tr["oracle_agrees"] = oracle_agrees ? ojson(*oracle_agrees) : ojson(nullptr);
  tr["reference_count"] = reference.triple_count;
  tr["matches_reference_count"] = triple_count == reference.triple_count;
  doc["triples"] = std::move(tr);

  ojson rows_json = ojson::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RowVerdict& v = rows[i];
    const ReferenceRow& ref = reference.rows[i];
    ojson row;
    row["id"] = v.id;
    row["extent"] = ref.extent;
    row["intent"] = ref.intent;
    row["times"] = ref.times;
    row["verdict"] = !v.applicable ? "not_applicable" : (v.matched ? "match" : "mismatch");
    row["explanation"] = v.explanation;
    if (v.closed_triple) {
      row["closed_triple"] = {{"extent", set_names(labels, Axis::location, v.closed_triple->extent)},
                              {"intent", set_names(labels, Axis::dimension, v.closed_triple->intent)},
                              {"times", set_names(labels, Axis::timestamp, v.closed_triple->times)}};
    }
    rows_json.push_back(std::move(row));
  }
  doc["reference_rows"] = std::move(rows_json);

  ojson rules;
  rules["min_support"] = reference.min_support.fraction();
  rules["min_confidence"] = reference.min_confidence.fraction();
  rules["threshold_semantics"] = "minimums: support >= min_support and confidence >= min_confidence";
  rules["reference_count"] = reference.rule_count;
  rules["by_denominator"] = {
      {"locations",
       {{"generated", rules_locations.generated},
        {"kept", rules_locations.kept},
        {"matches_reference_count", rules_locations.kept == reference.rule_count}}},
      {"dimensions",
       {{"generated", rules_dimensions.generated},
        {"kept", rules_dimensions.kept},
        {"matches_reference_count", rules_dimensions.kept == reference.rule_count}}}};
  doc["rules"] = std::move(rules);

  doc["lattice"] = {{"nodes", lattice_nodes}, {"hasse_edges", lattice_edges}};
  doc["flattened_lattice"] = {
      {"nodes", flat_lattice_nodes},
      {"hasse_edges", flat_lattice_edges},
      {"complete", flat_lattice_complete ? ojson(*flat_lattice_complete) : ojson(nullptr)}};
  doc["orientation"] = {{"triples_identical", orientation_triples_identical},
                        {"lattices_isomorphic", orientation_isomorphic}};
  return doc.dump(2) + "\n";
}

}  // namespace agro
