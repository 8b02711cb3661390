#include "agrolattice/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "agrolattice/errors.hpp"

namespace agro {

bool precedes(const AgroTriple& a, const AgroTriple& b) {
  if (a.extent.universe() != b.extent.universe() || a.intent.universe() != b.intent.universe() ||
      a.times.universe() != b.times.universe())
    throw AxisMismatch("precedes: triples range over different axes");
  return a.extent.is_subset_of(b.extent) && b.intent.is_subset_of(a.intent) && b.times.is_subset_of(a.times);
}

HasseDiagram HasseDiagram::from_edges(std::size_t node_count, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  HasseDiagram h;
  h.node_count = node_count;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  h.parents.assign(node_count, {});
  h.children.assign(node_count, {});
  for (auto [child, parent] : edges) {
    h.parents[child].push_back(parent);
    h.children[parent].push_back(child);
  }
  for (auto& c : h.children) std::sort(c.begin(), c.end());
  h.edges = std::move(edges);
  return h;
}

IndexSet HasseDiagram::strictly_above(std::size_t node) const {
  IndexSet seen(node_count);
  std::vector<std::size_t> stack(parents[node].begin(), parents[node].end());
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (seen.contains(v)) continue;
    seen.insert(v);
    for (std::size_t p : parents[v]) stack.push_back(p);
  }
  return seen;
}

SpatioTemporalLattice::SpatioTemporalLattice(TripleSet nodes, HasseDiagram hasse, std::optional<std::size_t> top,
                                             std::optional<std::size_t> bottom)
    : nodes_(std::move(nodes)), hasse_(std::move(hasse)), top_(top), bottom_(bottom) {}

std::size_t SpatioTemporalLattice::index_of(const AgroTriple& t) const {
  const std::size_t i = nodes_.find(t);
  if (i == nodes_.size()) throw NodeNotInLattice("triple is not a lattice node");
  return i;
}

SpatioTemporalLattice build_lattice(const TripleSet& triples, const LatticeOptions& options) {
  std::vector<AgroTriple> nodes = triples.triples();
  if (options.artificial_bounds && !nodes.empty()) {
    const std::size_t nl = nodes.front().extent.universe();
    const std::size_t nd = nodes.front().intent.universe();
    const std::size_t nt = nodes.front().times.universe();
    nodes.push_back({IndexSet::full(nl), IndexSet(nd), IndexSet(nt)});
    nodes.push_back({IndexSet(nl), IndexSet::full(nd), IndexSet::full(nt)});
  }
  TripleSet sorted(std::move(nodes));
  const std::size_t n = sorted.size();

  std::optional<std::size_t> top;
  std::optional<std::size_t> bottom;
  if (options.artificial_bounds && n > 0) {
    const AgroTriple& any = sorted[0];
    top = sorted.find({IndexSet::full(any.extent.universe()), IndexSet(any.intent.universe()),
                       IndexSet(any.times.universe())});
    bottom = sorted.find({IndexSet(any.extent.universe()), IndexSet::full(any.intent.universe()),
                          IndexSet::full(any.times.universe())});
  }

  // A strict step up grows the extent or, at equal extent, shrinks intent/times.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    const auto& t = sorted[i];
    return std::pair<std::size_t, std::ptrdiff_t>(
        t.extent.size(), -static_cast<std::ptrdiff_t>(t.intent.size() + t.times.size()));
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  HasseDiagram hasse =
      transitive_reduction(n, order, [&](std::size_t a, std::size_t b) { return precedes(sorted[a], sorted[b]); });
  return SpatioTemporalLattice(std::move(sorted), std::move(hasse), top, bottom);
}

namespace {

template <typename Lattice, typename Node>
void fill_bounds(const Lattice& lattice, const std::vector<std::size_t>& frontier, BoundResult<Node>& out) {
  for (std::size_t f : frontier) out.frontier.push_back(lattice.node(f));
  if (frontier.size() == 1) out.exact = lattice.node(frontier.front());
}

// Unique node among the minimal nodes above (or maximal nodes below) a value
// that need not be a node itself.
template <typename Lattice, typename Node, typename Leq>
std::optional<Node> resolve(const Lattice& lattice, const Node& value, bool upward, Leq&& leq_value) {
  std::vector<std::size_t> cands;
  for (std::size_t u = 0; u < lattice.size(); ++u)
    if (upward ? leq_value(value, lattice.node(u)) : leq_value(lattice.node(u), value)) cands.push_back(u);
  std::vector<std::size_t> extremal;
  for (std::size_t u : cands) {
    bool keep = true;
    for (std::size_t v : cands)
      if (v != u && (upward ? lattice.leq(v, u) : lattice.leq(u, v))) {
        keep = false;
        break;
      }
    if (keep) extremal.push_back(u);
  }
  if (extremal.size() != 1) return std::nullopt;
  return lattice.node(extremal.front());
}

}  // namespace

BoundResult<AgroTriple> join(const SpatioTemporalLattice& lattice, const DataCube& cube, const AgroTriple& a,
                             const AgroTriple& b) {
  const std::size_t i = lattice.index_of(a);
  const std::size_t j = lattice.index_of(b);
  const FormalContext dims = dimension_context(cube);
  BoundResult<AgroTriple> out{std::nullopt, {}, {a.extent | b.extent,
                                                 dims.close_objects(a.intent) & dims.close_objects(b.intent),
                                                 a.times & b.times},
                              std::nullopt};
  fill_bounds(lattice, minimal_upper_bounds(lattice, i, j), out);
  out.formula_closure = resolve(lattice, out.formula_value, true, precedes);
  return out;
}

BoundResult<AgroTriple> meet(const SpatioTemporalLattice& lattice, const DataCube& cube, const AgroTriple& a,
                             const AgroTriple& b) {
  const std::size_t i = lattice.index_of(a);
  const std::size_t j = lattice.index_of(b);
  const FormalContext flat = flatten(cube);
  BoundResult<AgroTriple> out{std::nullopt, {}, {flat.close_objects(a.extent) & flat.close_objects(b.extent),
                                                 a.intent | b.intent, a.times | b.times},
                              std::nullopt};
  fill_bounds(lattice, maximal_lower_bounds(lattice, i, j), out);
  out.formula_closure = resolve(lattice, out.formula_value, false, precedes);
  return out;
}

ConceptLattice::ConceptLattice(FormalContext context, std::vector<DyadicConcept> nodes, HasseDiagram hasse)
    : context_(std::move(context)), nodes_(std::move(nodes)), hasse_(std::move(hasse)) {}

std::size_t ConceptLattice::index_of(const DyadicConcept& c) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), c);
  if (it == nodes_.end() || !(*it == c)) throw NodeNotInLattice("concept is not a lattice node");
  return static_cast<std::size_t>(it - nodes_.begin());
}

ConceptLattice flatten_lattice(const DataCube& cube) {
  FormalContext ctx = flatten(cube);
  std::vector<DyadicConcept> nodes = enumerate_formal_concepts(ctx);
  const std::size_t n = nodes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return nodes[a].extent.size() < nodes[b].extent.size(); });
  // Distinct concepts with nested extents differ in extent size.
  HasseDiagram hasse = transitive_reduction(n, order, [&](std::size_t a, std::size_t b) {
    return nodes[a].extent.size() < nodes[b].extent.size() && nodes[a].extent.is_subset_of(nodes[b].extent);
  });
  return ConceptLattice(std::move(ctx), std::move(nodes), std::move(hasse));
}

namespace {

bool concept_leq(const DyadicConcept& a, const DyadicConcept& b) { return a.extent.is_subset_of(b.extent); }

}  // namespace

BoundResult<DyadicConcept> join(const ConceptLattice& lattice, const DyadicConcept& a, const DyadicConcept& b) {
  const std::size_t i = lattice.index_of(a);
  const std::size_t j = lattice.index_of(b);
  const auto& ctx = lattice.context();
  const IndexSet extent = ctx.close_objects(a.extent | b.extent);
  BoundResult<DyadicConcept> out{std::nullopt, {}, {extent, a.intent & b.intent}, std::nullopt};
  fill_bounds(lattice, minimal_upper_bounds(lattice, i, j), out);
  out.formula_closure = resolve(lattice, out.formula_value, true, concept_leq);
  return out;
}

BoundResult<DyadicConcept> meet(const ConceptLattice& lattice, const DyadicConcept& a, const DyadicConcept& b) {
  const std::size_t i = lattice.index_of(a);
  const std::size_t j = lattice.index_of(b);
  const auto& ctx = lattice.context();
  const IndexSet intent = ctx.close_attributes(a.intent | b.intent);
  BoundResult<DyadicConcept> out{std::nullopt, {}, {a.extent & b.extent, intent}, std::nullopt};
  fill_bounds(lattice, maximal_lower_bounds(lattice, i, j), out);
  out.formula_closure = resolve(lattice, out.formula_value, false, concept_leq);
  return out;
}

namespace {

// Joint colour refinement over both graphs so colour ids are comparable.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> refine_colours(
    const HasseDiagram& g1, const HasseDiagram& g2, const std::vector<std::uint64_t>& labels1,
    const std::vector<std::uint64_t>& labels2) {
  auto initial = [](const HasseDiagram& g, const std::vector<std::uint64_t>& labels, std::size_t v) {
    return std::vector<std::uint64_t>{labels.empty() ? 0 : labels[v], g.parents[v].size(), g.children[v].size()};
  };
  std::vector<std::uint64_t> c1(g1.node_count);
  std::vector<std::uint64_t> c2(g2.node_count);
  {
    std::map<std::vector<std::uint64_t>, std::uint64_t> ids;
    for (std::size_t v = 0; v < g1.node_count; ++v) c1[v] = ids.emplace(initial(g1, labels1, v), ids.size()).first->second;
    for (std::size_t v = 0; v < g2.node_count; ++v) c2[v] = ids.emplace(initial(g2, labels2, v), ids.size()).first->second;
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> ids;
    auto signature = [](const HasseDiagram& g, const std::vector<std::uint64_t>& c, std::size_t v) {
      std::vector<std::uint64_t> up;
      std::vector<std::uint64_t> down;
      for (std::size_t p : g.parents[v]) up.push_back(c[p]);
      for (std::size_t ch : g.children[v]) down.push_back(c[ch]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      std::vector<std::uint64_t> sig{c[v], up.size()};
      sig.insert(sig.end(), up.begin(), up.end());
      sig.insert(sig.end(), down.begin(), down.end());
      return sig;
    };
    std::vector<std::uint64_t> n1(g1.node_count);
    std::vector<std::uint64_t> n2(g2.node_count);
    for (std::size_t v = 0; v < g1.node_count; ++v) n1[v] = ids.emplace(signature(g1, c1, v), ids.size()).first->second;
    for (std::size_t v = 0; v < g2.node_count; ++v) n2[v] = ids.emplace(signature(g2, c2, v), ids.size()).first->second;
    c1 = std::move(n1);
    c2 = std::move(n2);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(c1), std::move(c2)};
}

class Matcher {
 public:
  Matcher(const HasseDiagram& g1, const HasseDiagram& g2, std::vector<std::uint64_t> c1, std::vector<std::uint64_t> c2)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)), map12_(g1.node_count, none), map21_(g2.node_count, none) {
    build_order();
    for (std::size_t w = 0; w < g2_.node_count; ++w) by_colour_[c2_[w]].push_back(w);
  }

  bool run() { return extend(0); }

 private:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  // Visit rare colours first, then grow along edges so each new node is
  // constrained by already mapped neighbours.
  void build_order() {
    const std::size_t n = g1_.node_count;
    std::map<std::uint64_t, std::size_t> freq;
    for (auto c : c1_) ++freq[c];
    std::vector<std::size_t> seeds(n);
    std::iota(seeds.begin(), seeds.end(), 0);
    std::stable_sort(seeds.begin(), seeds.end(),
                     [&](std::size_t a, std::size_t b) { return freq[c1_[a]] < freq[c1_[b]]; });
    std::vector<bool> placed(n, false);
    for (std::size_t s : seeds) {
      if (placed[s]) continue;
      std::vector<std::size_t> queue{s};
      placed[s] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const std::size_t v = queue[q];
        order_.push_back(v);
        for (const auto* adj : {&g1_.parents[v], &g1_.children[v]})
          for (std::size_t w : *adj)
            if (!placed[w]) {
              placed[w] = true;
              queue.push_back(w);
            }
      }
    }
  }

  static bool has(const std::vector<std::size_t>& sorted, std::size_t x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  }

  // Adjacency lists are sorted.
  bool consistent_side(const std::vector<std::size_t>& adj1, const std::vector<std::size_t>& adj2) const {
    std::size_t mapped1 = 0;
    for (std::size_t u : adj1) {
      if (map12_[u] == none) continue;
      ++mapped1;
      if (!has(adj2, map12_[u])) return false;
    }
    std::size_t mapped2 = 0;
    for (std::size_t u : adj2)
      if (map21_[u] != none) ++mapped2;
    return mapped1 == mapped2;
  }

  bool feasible(std::size_t v, std::size_t w) const {
    if (c1_[v] != c2_[w] || map21_[w] != none) return false;
    return consistent_side(g1_.parents[v], g2_.parents[w]) && consistent_side(g1_.children[v], g2_.children[w]);
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w : by_colour_[c1_[v]]) {
      if (!feasible(v, w)) continue;
      map12_[v] = w;
      map21_[w] = v;
      if (extend(depth + 1)) return true;
      map12_[v] = none;
      map21_[w] = none;
    }
    return false;
  }

  const HasseDiagram& g1_;
  const HasseDiagram& g2_;
  std::vector<std::uint64_t> c1_;
  std::vector<std::uint64_t> c2_;
  std::vector<std::size_t> map12_;
  std::vector<std::size_t> map21_;
  std::vector<std::size_t> order_;
  std::map<std::uint64_t, std::vector<std::size_t>> by_colour_;
};

}  // namespace

bool check_isomorphic(const HasseDiagram& g1, const HasseDiagram& g2, const std::vector<std::uint64_t>& labels1,
                      const std::vector<std::uint64_t>& labels2) {
  if (g1.node_count != g2.node_count || g1.edges.size() != g2.edges.size()) return false;
  if (labels1.empty() != labels2.empty()) return false;
  if (g1.node_count == 0) return true;
  auto [c1, c2] = refine_colours(g1, g2, labels1, labels2);
  auto s1 = c1;
  auto s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return false;
  return Matcher(g1, g2, std::move(c1), std::move(c2)).run();
}

bool check_isomorphic(const SpatioTemporalLattice& l1, const SpatioTemporalLattice& l2,
                      const IsomorphismOptions& options) {
  std::vector<std::uint64_t> labels1;
  std::vector<std::uint64_t> labels2;
  if (options.match_component_sizes) {
    auto sig = [](const AgroTriple& t) {
      return (static_cast<std::uint64_t>(t.extent.size()) << 40) | (static_cast<std::uint64_t>(t.intent.size()) << 20) |
             static_cast<std::uint64_t>(t.times.size());
    };
    for (const auto& t : l1.nodes()) labels1.push_back(sig(t));
    for (const auto& t : l2.nodes()) labels2.push_back(sig(t));
  }
  return check_isomorphic(l1.hasse(), l2.hasse(), labels1, labels2);
}

}  // namespace agro
