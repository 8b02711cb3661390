#include "agrolattice/concepts.hpp"

#include <algorithm>
#include <functional>

#include "agrolattice/errors.hpp"

namespace agro {

bool operator<(const AgroTriple& a, const AgroTriple& b) {
  if (!(a.extent == b.extent)) return a.extent < b.extent;
  if (!(a.intent == b.intent)) return a.intent < b.intent;
  return a.times < b.times;
}

TripleSet::TripleSet(std::vector<AgroTriple> triples) : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

std::size_t TripleSet::find(const AgroTriple& t) const {
  auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it != triples_.end() && *it == t) return static_cast<std::size_t>(it - triples_.begin());
  return triples_.size();
}

bool TripleSet::contains(const AgroTriple& t) const { return find(t) != triples_.size(); }

namespace {

// Close-by-One: each concept is generated once, from the lexically first
// attribute whose addition produces it (canonicity test on the prefix).
class CloseByOne {
 public:
  explicit CloseByOne(const FormalContext& ctx) : ctx_(ctx) {
    columns_.reserve(ctx.num_attributes());
    for (std::size_t a = 0; a < ctx.num_attributes(); ++a) columns_.push_back(ctx.column(a));
  }

  std::vector<DyadicConcept> run() {
    IndexSet all = IndexSet::full(ctx_.num_objects());
    IndexSet intent = ctx_.up(all);
    descend(std::move(all), std::move(intent), 0);
    return std::move(out_);
  }

 private:
  void descend(IndexSet extent, IndexSet intent, std::size_t start) {
    out_.push_back({extent, intent});
    for (std::size_t attr = start; attr < ctx_.num_attributes(); ++attr) {
      if (intent.contains(attr)) continue;
      IndexSet next_extent = extent & columns_[attr];
      IndexSet next_intent = ctx_.up(next_extent);
      if (next_intent.agrees_below(intent, attr)) descend(std::move(next_extent), std::move(next_intent), attr + 1);
    }
  }

  const FormalContext& ctx_;
  std::vector<IndexSet> columns_;
  std::vector<DyadicConcept> out_;
};

}  // namespace

std::vector<DyadicConcept> enumerate_formal_concepts(const FormalContext& context) {
  auto concepts = CloseByOne(context).run();
  std::sort(concepts.begin(), concepts.end());
  return concepts;
}

std::vector<DyadicConcept> enumerate_slice_concepts(const SliceContext& slice) {
  auto all = enumerate_formal_concepts(slice.table);
  std::erase_if(all, [](const DyadicConcept& c) { return c.extent.empty() || c.intent.empty(); });
  return all;
}

// Every triadic concept (A, C, D) has A closed in the flattened context, with
// C x D a maximal rectangle inside A's pair set. So: enumerate the flattened
// concepts (A, B), enumerate the rectangles of B as concepts of a small
// dyadic context, and keep a rectangle iff it derives back to exactly A.
// The inner context uses the orientation's major axis as attributes.
TripleSet enumerate_agro_triples(const DataCube& cube) {
  const std::size_t nd = cube.num_dimensions();
  const std::size_t nt = cube.num_timestamps();
  const bool dims_are_objects = cube.orientation() == Orientation::by_time;
  const std::size_t inner_objects = dims_are_objects ? nd : nt;
  const std::size_t inner_attrs = dims_are_objects ? nt : nd;

  std::vector<AgroTriple> found;
  for (const auto& outer : enumerate_formal_concepts(flatten(cube))) {
    if (outer.extent.empty() || outer.intent.empty()) continue;

    std::vector<IndexSet> rows(inner_objects, IndexSet(inner_attrs));
    outer.intent.for_each([&](std::size_t p) {
      auto [d, t] = cube.pair_at(p);
      if (dims_are_objects)
        rows[d].insert(t);
      else
        rows[t].insert(d);
    });
    const FormalContext inner(inner_attrs, std::move(rows));

    for (const auto& rect : enumerate_formal_concepts(inner)) {
      if (rect.extent.empty() || rect.intent.empty()) continue;
      const DimSet& dims = dims_are_objects ? rect.extent : rect.intent;
      const TimeSet& times = dims_are_objects ? rect.intent : rect.extent;
      const IndexSet mask = cube.box_mask(dims, times);
      bool exact = true;
      for (std::size_t l = 0; l < cube.num_locations() && exact; ++l)
        if (!outer.extent.contains(l) && mask.is_subset_of(cube.flat_row(l))) exact = false;
      if (exact) found.push_back({outer.extent, dims, times});
    }
  }
  return TripleSet(std::move(found));
}

TripleSet oracle_enumerate(const DataCube& cube, const OracleOptions& options) {
  const std::size_t nl = cube.num_locations();
  const std::size_t nd = cube.num_dimensions();
  const std::size_t nt = cube.num_timestamps();
  if (nd + nt >= 63 || (std::uint64_t{1} << (nd + nt)) > options.budget)
    throw BudgetExceeded("oracle search space 2^" + std::to_string(nd + nt) + " exceeds budget");

  auto full_box = [&](std::size_t l, std::uint64_t dmask, std::uint64_t tmask) {
    for (std::size_t d = 0; d < nd; ++d)
      if ((dmask >> d) & 1U)
        for (std::size_t t = 0; t < nt; ++t)
          if (((tmask >> t) & 1U) && !cube.contains(l, d, t)) return false;
    return true;
  };

  std::vector<AgroTriple> found;
  for (std::uint64_t dmask = 1; dmask < (std::uint64_t{1} << nd); ++dmask) {
    for (std::uint64_t tmask = 1; tmask < (std::uint64_t{1} << nt); ++tmask) {
      std::vector<std::size_t> locs;
      for (std::size_t l = 0; l < nl; ++l)
        if (full_box(l, dmask, tmask)) locs.push_back(l);
      if (locs.empty()) continue;

      auto all_locs = [&](std::uint64_t dm, std::uint64_t tm) {
        return std::all_of(locs.begin(), locs.end(), [&](std::size_t l) { return full_box(l, dm, tm); });
      };
      bool maximal = true;
      for (std::size_t d = 0; d < nd && maximal; ++d)
        if (!((dmask >> d) & 1U) && all_locs(std::uint64_t{1} << d, tmask)) maximal = false;
      for (std::size_t t = 0; t < nt && maximal; ++t)
        if (!((tmask >> t) & 1U) && all_locs(dmask, std::uint64_t{1} << t)) maximal = false;
      if (!maximal) continue;

      AgroTriple triple{IndexSet(nl), IndexSet(nd), IndexSet(nt)};
      for (std::size_t l : locs) triple.extent.insert(l);
      for (std::size_t d = 0; d < nd; ++d)
        if ((dmask >> d) & 1U) triple.intent.insert(d);
      for (std::size_t t = 0; t < nt; ++t)
        if ((tmask >> t) & 1U) triple.times.insert(t);
      found.push_back(std::move(triple));
    }
  }
  return TripleSet(std::move(found));
}

bool is_maximal_box(const DataCube& cube, const AgroTriple& triple) {
  if (triple.extent.universe() != cube.num_locations() || triple.intent.universe() != cube.num_dimensions() ||
      triple.times.universe() != cube.num_timestamps())
    throw AxisMismatch("triple does not match cube axes");

  auto box = [&](const LocSet& l, const DimSet& j, const TimeSet& t) {
    bool ok = true;
    l.for_each([&](std::size_t a) {
      j.for_each([&](std::size_t b) {
        t.for_each([&](std::size_t c) { ok = ok && cube.contains(a, b, c); });
      });
    });
    return ok;
  };
  if (!box(triple.extent, triple.intent, triple.times)) return false;

  auto single = [](std::size_t universe, std::size_t i) { return IndexSet(universe, {i}); };
  for (std::size_t l = 0; l < cube.num_locations(); ++l)
    if (!triple.extent.contains(l) && box(single(cube.num_locations(), l), triple.intent, triple.times)) return false;
  for (std::size_t d = 0; d < cube.num_dimensions(); ++d)
    if (!triple.intent.contains(d) && box(triple.extent, single(cube.num_dimensions(), d), triple.times))
      return false;
  for (std::size_t t = 0; t < cube.num_timestamps(); ++t)
    if (!triple.times.contains(t) && box(triple.extent, triple.intent, single(cube.num_timestamps(), t)))
      return false;
  return true;
}

}  // namespace agro
