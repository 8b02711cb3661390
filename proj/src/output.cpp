#include "agrolattice/output.hpp"

#include "json.hpp"

namespace agro {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string ratio_field(const Ratio& r) { return r.fraction() + " (" + r.decimal(6) + ")"; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string join_names(const AxisLabels& labels, Axis axis, const IndexSet& set, const std::string& sep) {
  std::string out;
  set.for_each([&](std::size_t i) {
    if (!out.empty()) out += sep;
    out += labels.names(axis)[i];
  });
  return out;
}

std::string format_triples(const AxisLabels& labels, const TripleSet& triples) {
  std::string out;
  for (const auto& t : triples) {
    out += join_names(labels, Axis::location, t.extent) + ";" + join_names(labels, Axis::dimension, t.intent) + ";" +
           join_names(labels, Axis::timestamp, t.times) + "\n";
  }
  return out;
}

std::string format_lattice_dot(const AxisLabels& labels, const SpatioTemporalLattice& lattice) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& t = lattice.node(i);
    const std::string label = "{" + join_names(labels, Axis::location, t.extent, ", ") + "} | {" +
                              join_names(labels, Axis::dimension, t.intent, ", ") + "} | {" +
                              join_names(labels, Axis::timestamp, t.times, ", ") + "}";
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(label) + "\"];\n";
  }
  for (auto [child, parent] : lattice.hasse().edges)
    out += "  n" + std::to_string(child) + " -> n" + std::to_string(parent) + ";\n";
  out += "}\n";
  return out;
}

std::string format_lattice_json(const AxisLabels& labels, const SpatioTemporalLattice& lattice) {
  nlohmann::ordered_json doc;
  doc["node_count"] = lattice.size();
  doc["edge_count"] = lattice.hasse().edges.size();
  auto nodes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& t = lattice.node(i);
    nlohmann::ordered_json n;
    n["id"] = i;
    n["extent"] = set_names(labels, Axis::location, t.extent);
    n["intent"] = set_names(labels, Axis::dimension, t.intent);
    n["times"] = set_names(labels, Axis::timestamp, t.times);
    n["artificial"] = lattice.artificial_top() == i || lattice.artificial_bottom() == i;
    nodes.push_back(std::move(n));
  }
  doc["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (auto [child, parent] : lattice.hasse().edges) edges.push_back({{"child", child}, {"parent", parent}});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string format_rules_csv(const AxisLabels& labels, const RuleSet& rules) {
  std::string out = "antecedent,consequent,timestamps,support,confidence\n";
  for (const auto& r : rules) {
    out += csv_quote(join_names(labels, Axis::dimension, r.antecedent)) + "," +
           csv_quote(join_names(labels, Axis::dimension, r.consequent)) + "," +
           csv_quote(join_names(labels, Axis::timestamp, r.times)) + "," + ratio_field(r.support) + "," +
           ratio_field(r.confidence) + "\n";
  }
  return out;
}

}  // namespace agro
