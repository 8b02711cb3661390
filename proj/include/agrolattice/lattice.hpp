#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "agrolattice/concepts.hpp"
#include "agrolattice/cube.hpp"

namespace agro {

/// `b` is a super triple of `a`: a.extent ⊆ b.extent, b.intent ⊆ a.intent
/// and b.times ⊆ a.times. Reflexive. Throws AxisMismatch.
bool precedes(const AgroTriple& a, const AgroTriple& b);

/// Covering relation of a finite partial order.
struct HasseDiagram {
  std::size_t node_count = 0;
  /// (child, parent) pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> parents;
  std::vector<std::vector<std::size_t>> children;

  static HasseDiagram from_edges(std::size_t node_count, std::vector<std::pair<std::size_t, std::size_t>> edges);
  /// Nodes reachable upward from `node` through at least one edge.
  IndexSet strictly_above(std::size_t node) const;
};

/// Transitive reduction of the strict order `less` over nodes [0, n).
/// `linear_extension` must list every node such that less(x, y) implies x
/// comes before y.
template <typename Less>
HasseDiagram transitive_reduction(std::size_t n, const std::vector<std::size_t>& linear_extension, Less&& less) {
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[linear_extension[r]] = r;
  // above[r] holds the ranks strictly above the node at rank r.
  std::vector<IndexSet> above(n, IndexSet(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      if (less(linear_extension[r], linear_extension[s])) above[r].insert(s);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 0; r < n; ++r) {
    IndexSet dominated(n);
    above[r].for_each([&](std::size_t s) {
      if (dominated.contains(s)) return;
      edges.emplace_back(linear_extension[r], linear_extension[s]);
      dominated |= above[s];
    });
  }
  return HasseDiagram::from_edges(n, std::move(edges));
}

/// Result of a supremum / infimum query. `frontier` lists the minimal upper
/// (maximal lower) bounds present in the node set; `exact` is set when that
/// frontier is a single node. `formula_value` is the closed-form bound and
/// `formula_closure` the unique node it resolves to in the order, if any.
template <typename Node>
struct BoundResult {
  std::optional<Node> exact;
  std::vector<Node> frontier;
  Node formula_value;
  std::optional<Node> formula_closure;
};

struct LatticeOptions {
  /// Add (L, ∅, ∅) above and (∅, J, T) below all triples.
  bool artificial_bounds = false;
};

/// Agro-triples ordered by `precedes`, with their Hasse diagram.
class SpatioTemporalLattice {
 public:
  SpatioTemporalLattice(TripleSet nodes, HasseDiagram hasse, std::optional<std::size_t> top,
                        std::optional<std::size_t> bottom);

  const TripleSet& nodes() const { return nodes_; }
  const AgroTriple& node(std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }
  const HasseDiagram& hasse() const { return hasse_; }
  bool leq(std::size_t i, std::size_t j) const { return precedes(nodes_[i], nodes_[j]); }
  /// Throws NodeNotInLattice.
  std::size_t index_of(const AgroTriple& t) const;

  std::optional<std::size_t> artificial_top() const { return top_; }
  std::optional<std::size_t> artificial_bottom() const { return bottom_; }

 private:
  TripleSet nodes_;
  HasseDiagram hasse_;
  std::optional<std::size_t> top_;
  std::optional<std::size_t> bottom_;
};

SpatioTemporalLattice build_lattice(const TripleSet& triples, const LatticeOptions& options = {});

/// Least upper bound of a and b. The closed form is
/// (a.extent ∪ b.extent, cl(a.intent) ∩ cl(b.intent), a.times ∩ b.times)
/// with cl the dimension closure over location x timestamp pairs.
/// Throws NodeNotInLattice.
BoundResult<AgroTriple> join(const SpatioTemporalLattice& lattice, const DataCube& cube, const AgroTriple& a,
                             const AgroTriple& b);
/// Greatest lower bound of a and b. The closed form is
/// (cl(a.extent) ∩ cl(b.extent), a.intent ∪ b.intent, a.times ∪ b.times)
/// with cl the location closure over dimension x timestamp pairs.
BoundResult<AgroTriple> meet(const SpatioTemporalLattice& lattice, const DataCube& cube, const AgroTriple& a,
                             const AgroTriple& b);

/// Concept lattice of the flattened context (objects = locations,
/// attributes = dimension x timestamp pairs). Always complete.
class ConceptLattice {
 public:
  ConceptLattice(FormalContext context, std::vector<DyadicConcept> nodes, HasseDiagram hasse);

  const FormalContext& context() const { return context_; }
  const std::vector<DyadicConcept>& nodes() const { return nodes_; }
  const DyadicConcept& node(std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }
  const HasseDiagram& hasse() const { return hasse_; }
  bool leq(std::size_t i, std::size_t j) const { return nodes_[i].extent.is_subset_of(nodes_[j].extent); }
  /// Throws NodeNotInLattice.
  std::size_t index_of(const DyadicConcept& c) const;

 private:
  FormalContext context_;
  std::vector<DyadicConcept> nodes_;
  HasseDiagram hasse_;
};

ConceptLattice flatten_lattice(const DataCube& cube);

BoundResult<DyadicConcept> join(const ConceptLattice& lattice, const DyadicConcept& a, const DyadicConcept& b);
BoundResult<DyadicConcept> meet(const ConceptLattice& lattice, const DyadicConcept& a, const DyadicConcept& b);

/// Minimal elements of the common upper bounds of nodes i and j.
template <typename Lattice>
std::vector<std::size_t> minimal_upper_bounds(const Lattice& lattice, std::size_t i, std::size_t j) {
  std::vector<std::size_t> ub;
  for (std::size_t u = 0; u < lattice.size(); ++u)
    if (lattice.leq(i, u) && lattice.leq(j, u)) ub.push_back(u);
  std::vector<std::size_t> out;
  for (std::size_t u : ub) {
    bool minimal = true;
    for (std::size_t v : ub)
      if (v != u && lattice.leq(v, u)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(u);
  }
  return out;
}

/// Maximal elements of the common lower bounds of nodes i and j.
template <typename Lattice>
std::vector<std::size_t> maximal_lower_bounds(const Lattice& lattice, std::size_t i, std::size_t j) {
  std::vector<std::size_t> lb;
  for (std::size_t u = 0; u < lattice.size(); ++u)
    if (lattice.leq(u, i) && lattice.leq(u, j)) lb.push_back(u);
  std::vector<std::size_t> out;
  for (std::size_t u : lb) {
    bool maximal = true;
    for (std::size_t v : lb)
      if (v != u && lattice.leq(u, v)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(u);
  }
  return out;
}

struct IsomorphismOptions {
  /// Also require matched nodes to agree on (|extent|, |intent|, |times|).
  bool match_component_sizes = false;
};

/// Order-isomorphism test on Hasse diagrams, with optional per-node labels
/// that a mapping must preserve.
bool check_isomorphic(const HasseDiagram& g1, const HasseDiagram& g2, const std::vector<std::uint64_t>& labels1 = {},
                      const std::vector<std::uint64_t>& labels2 = {});
bool check_isomorphic(const SpatioTemporalLattice& l1, const SpatioTemporalLattice& l2,
                      const IsomorphismOptions& options = {});

}  // namespace agro
