#include "agrolattice/cube.hpp"

#include <algorithm>

#include "agrolattice/errors.hpp"

namespace agro {

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::location:
      return "location";
    case Axis::dimension:
      return "dimension";
    case Axis::timestamp:
      return "timestamp";
  }
  return "?";
}

std::string_view orientation_name(Orientation o) {
  return o == Orientation::by_time ? "by_time" : "by_dimension";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "by_time" || text == "by-time") return Orientation::by_time;
  if (text == "by_dimension" || text == "by-dimension") return Orientation::by_dimension;
  throw Error("unknown orientation '" + std::string(text) + "'");
}

AxisLabels::AxisLabels(std::vector<std::string> locations, std::vector<std::string> dimensions,
                       std::vector<std::string> timestamps)
    : axes_{std::move(locations), std::move(dimensions), std::move(timestamps)} {
  for (int a = 0; a < 3; ++a) {
    const auto axis = static_cast<Axis>(a);
    if (axes_[a].empty()) throw EmptyAxis(std::string(axis_name(axis)));
    for (std::size_t i = 0; i < axes_[a].size(); ++i) {
      if (!lookup_[a].emplace(axes_[a][i], i).second)
        throw DuplicateLabel(axes_[a][i], std::string(axis_name(axis)));
    }
  }
}

std::size_t AxisLabels::index_of(Axis axis, std::string_view name) const {
  const auto& map = lookup_[static_cast<int>(axis)];
  auto it = map.find(std::string(name));
  if (it == map.end()) throw UnknownLabel(std::string(name), std::string(axis_name(axis)));
  return it->second;
}

bool AxisLabels::has(Axis axis, std::string_view name) const {
  return lookup_[static_cast<int>(axis)].contains(std::string(name));
}

FormalContext::FormalContext(std::size_t num_attributes, std::vector<IndexSet> rows)
    : num_attributes_(num_attributes), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.universe() != num_attributes_) throw AxisMismatch("FormalContext: row universe mismatch");
}

IndexSet FormalContext::column(std::size_t attribute) const {
  IndexSet col(rows_.size());
  for (std::size_t o = 0; o < rows_.size(); ++o)
    if (rows_[o].contains(attribute)) col.insert(o);
  return col;
}

IndexSet FormalContext::up(const IndexSet& objects) const {
  IndexSet common = IndexSet::full(num_attributes_);
  objects.for_each([&](std::size_t o) { common &= rows_[o]; });
  return common;
}

IndexSet FormalContext::down(const IndexSet& attributes) const {
  IndexSet holders(rows_.size());
  for (std::size_t o = 0; o < rows_.size(); ++o)
    if (attributes.is_subset_of(rows_[o])) holders.insert(o);
  return holders;
}

DataCube::DataCube(AxisLabels labels, const std::vector<Cell>& cells, Orientation orientation)
    : labels_(std::move(labels)), orientation_(orientation) {
  rows_.assign(num_locations(), IndexSet(num_pairs()));
  for (const Cell& c : cells) {
    check_bounds(c.loc, c.dim, c.time);
    rows_[c.loc].insert(pair_index(c.dim, c.time));
  }
}

void DataCube::check_bounds(std::size_t loc, std::size_t dim, std::size_t time) const {
  if (loc >= num_locations() || dim >= num_dimensions() || time >= num_timestamps())
    throw IndexOutOfBounds("cell (" + std::to_string(loc) + ", " + std::to_string(dim) + ", " +
                           std::to_string(time) + ") outside cube bounds");
}

bool DataCube::contains(std::size_t loc, std::size_t dim, std::size_t time) const {
  check_bounds(loc, dim, time);
  return rows_[loc].contains(pair_index(dim, time));
}

std::size_t DataCube::incidence_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::vector<Cell> DataCube::facts() const {
  std::vector<Cell> out;
  out.reserve(incidence_count());
  for (std::size_t l = 0; l < rows_.size(); ++l)
    rows_[l].for_each([&](std::size_t p) {
      auto [d, t] = pair_at(p);
      out.push_back({l, d, t});
    });
  std::sort(out.begin(), out.end());
  return out;
}

IndexPair DataCube::pair_at(std::size_t index) const {
  if (orientation_ == Orientation::by_time) return {index % num_dimensions(), index / num_dimensions()};
  return {index / num_timestamps(), index % num_timestamps()};
}

IndexSet DataCube::box_mask(const DimSet& dims, const TimeSet& times) const {
  IndexSet mask(num_pairs());
  dims.for_each([&](std::size_t d) { times.for_each([&](std::size_t t) { mask.insert(pair_index(d, t)); }); });
  return mask;
}

DataCube build_cube(AxisLabels labels, const std::vector<NamedFact>& triples, Orientation orientation) {
  std::vector<Cell> cells;
  cells.reserve(triples.size());
  for (const auto& [loc, dim, time] : triples) {
    cells.push_back({labels.index_of(Axis::location, loc), labels.index_of(Axis::dimension, dim),
                     labels.index_of(Axis::timestamp, time)});
  }
  return DataCube(std::move(labels), cells, orientation);
}

SliceContext slice_at(const DataCube& cube, std::size_t time_idx) {
  if (time_idx >= cube.num_timestamps())
    throw IndexOutOfBounds("timestamp index " + std::to_string(time_idx) + " out of range");
  std::vector<IndexSet> rows(cube.num_locations(), IndexSet(cube.num_dimensions()));
  for (std::size_t l = 0; l < cube.num_locations(); ++l)
    for (std::size_t d = 0; d < cube.num_dimensions(); ++d)
      if (cube.flat_row(l).contains(cube.pair_index(d, time_idx))) rows[l].insert(d);
  return {time_idx, FormalContext(cube.num_dimensions(), std::move(rows))};
}

DataCube reorient(const DataCube& cube, Orientation orientation) {
  return DataCube(cube.labels(), cube.facts(), orientation);
}

FormalContext flatten(const DataCube& cube) {
  std::vector<IndexSet> rows;
  rows.reserve(cube.num_locations());
  for (std::size_t l = 0; l < cube.num_locations(); ++l) rows.push_back(cube.flat_row(l));
  return FormalContext(cube.num_pairs(), std::move(rows));
}

FormalContext dimension_context(const DataCube& cube) {
  const std::size_t nt = cube.num_timestamps();
  std::vector<IndexSet> rows(cube.num_dimensions(), IndexSet(cube.num_locations() * nt));
  for (const Cell& c : cube.facts()) rows[c.dim].insert(c.loc * nt + c.time);
  return FormalContext(cube.num_locations() * nt, std::move(rows));
}

PairSet loc_friendly(const DataCube& cube, const LocSet& locs) {
  IndexSet common = IndexSet::full(cube.num_pairs());
  locs.for_each([&](std::size_t l) {
    if (l >= cube.num_locations()) throw IndexOutOfBounds("location index out of range");
    common &= cube.flat_row(l);
  });
  PairSet out;
  common.for_each([&](std::size_t p) { out.push_back(cube.pair_at(p)); });
  std::sort(out.begin(), out.end());
  return out;
}

PairSet dim_friendly(const DataCube& cube, const DimSet& dims) {
  PairSet out;
  for (std::size_t l = 0; l < cube.num_locations(); ++l)
    for (std::size_t t = 0; t < cube.num_timestamps(); ++t) {
      bool all = true;
      dims.for_each([&](std::size_t d) { all = all && cube.contains(l, d, t); });
      if (all) out.emplace_back(l, t);
    }
  return out;
}

PairSet time_friendly(const DataCube& cube, const TimeSet& times) {
  PairSet out;
  for (std::size_t l = 0; l < cube.num_locations(); ++l)
    for (std::size_t d = 0; d < cube.num_dimensions(); ++d) {
      bool all = true;
      times.for_each([&](std::size_t t) { all = all && cube.contains(l, d, t); });
      if (all) out.emplace_back(l, d);
    }
  return out;
}

DimSet slice_up(const SliceContext& slice, const LocSet& locs) { return slice.table.up(locs); }
LocSet slice_down(const SliceContext& slice, const DimSet& dims) { return slice.table.down(dims); }
LocSet closure_locs(const SliceContext& slice, const LocSet& locs) { return slice.table.close_objects(locs); }
DimSet closure_dims(const SliceContext& slice, const DimSet& dims) { return slice.table.close_attributes(dims); }

IndexSet make_set(const AxisLabels& labels, Axis axis, const std::vector<std::string>& names) {
  IndexSet s(labels.size(axis));
  for (const auto& n : names) s.insert(labels.index_of(axis, n));
  return s;
}

std::vector<std::string> set_names(const AxisLabels& labels, Axis axis, const IndexSet& set) {
  std::vector<std::string> out;
  set.for_each([&](std::size_t i) { out.push_back(labels.names(axis)[i]); });
  return out;
}

}  // namespace agro
