#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "agrolattice/index_set.hpp"

namespace agro {

enum class Axis { location, dimension, timestamp };

std::string_view axis_name(Axis axis);

/// Storage orientation of a cube. `by_time` keeps each location's flattened
/// row grouped by timestamp (one location x dimension table per timestamp);
/// `by_dimension` groups it by dimension (one location x timestamp table per
/// dimension). The logical fact set does not depend on orientation.
enum class Orientation { by_time, by_dimension };

std::string_view orientation_name(Orientation o);
Orientation parse_orientation(std::string_view text);

/// Named axes of a cube. Label order defines the index order used everywhere.
class AxisLabels {
 public:
  AxisLabels() = default;
  AxisLabels(std::vector<std::string> locations, std::vector<std::string> dimensions,
             std::vector<std::string> timestamps);

  const std::vector<std::string>& locations() const { return axes_[0]; }
  const std::vector<std::string>& dimensions() const { return axes_[1]; }
  const std::vector<std::string>& timestamps() const { return axes_[2]; }
  const std::vector<std::string>& names(Axis axis) const { return axes_[static_cast<int>(axis)]; }
  std::size_t size(Axis axis) const { return names(axis).size(); }

  /// Throws UnknownLabel.
  std::size_t index_of(Axis axis, std::string_view name) const;
  bool has(Axis axis, std::string_view name) const;

  friend bool operator==(const AxisLabels& a, const AxisLabels& b) { return a.axes_ == b.axes_; }

 private:
  std::vector<std::string> axes_[3];
  std::unordered_map<std::string, std::size_t> lookup_[3];
};

struct Cell {
  std::size_t loc = 0;
  std::size_t dim = 0;
  std::size_t time = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using IndexPair = std::pair<std::size_t, std::size_t>;
/// Sorted, duplicate-free list of index pairs.
using PairSet = std::vector<IndexPair>;

/// Boolean object x attribute table with both derivation operators.
class FormalContext {
 public:
  FormalContext() = default;
  FormalContext(std::size_t num_attributes, std::vector<IndexSet> rows);

  std::size_t num_objects() const { return rows_.size(); }
  std::size_t num_attributes() const { return num_attributes_; }
  const IndexSet& row(std::size_t object) const { return rows_[object]; }
  const std::vector<IndexSet>& rows() const { return rows_; }
  /// Objects possessing `attribute`.
  IndexSet column(std::size_t attribute) const;

  /// Attributes shared by every object in `objects` (all attributes for the empty set).
  IndexSet up(const IndexSet& objects) const;
  /// Objects possessing every attribute in `attributes` (all objects for the empty set).
  IndexSet down(const IndexSet& attributes) const;
  IndexSet close_objects(const IndexSet& objects) const { return down(up(objects)); }
  IndexSet close_attributes(const IndexSet& attributes) const { return up(down(attributes)); }

 private:
  std::size_t num_attributes_ = 0;
  std::vector<IndexSet> rows_;
};

/// One timestamp's location x dimension table.
struct SliceContext {
  std::size_t time_idx = 0;
  FormalContext table;

  const IndexSet& row(std::size_t loc) const { return table.row(loc); }
};

/// Ternary incidence relation over (location, dimension, timestamp).
///
/// Immutable after construction. Each location owns a flattened row over the
/// dimension x timestamp pairs whose bit layout follows the orientation.
class DataCube {
 public:
  DataCube(AxisLabels labels, const std::vector<Cell>& cells, Orientation orientation = Orientation::by_time);

  const AxisLabels& labels() const { return labels_; }
  Orientation orientation() const { return orientation_; }
  std::size_t num_locations() const { return labels_.size(Axis::location); }
  std::size_t num_dimensions() const { return labels_.size(Axis::dimension); }
  std::size_t num_timestamps() const { return labels_.size(Axis::timestamp); }
  std::size_t num_pairs() const { return num_dimensions() * num_timestamps(); }

  bool contains(std::size_t loc, std::size_t dim, std::size_t time) const;
  bool contains(const Cell& c) const { return contains(c.loc, c.dim, c.time); }
  std::size_t incidence_count() const;
  /// All facts, sorted by (loc, dim, time).
  std::vector<Cell> facts() const;

  /// Bit position of (dim, time) inside a flattened row.
  std::size_t pair_index(std::size_t dim, std::size_t time) const {
    return orientation_ == Orientation::by_time ? time * num_dimensions() + dim : dim * num_timestamps() + time;
  }
  IndexPair pair_at(std::size_t index) const;
  const IndexSet& flat_row(std::size_t loc) const { return rows_[loc]; }
  /// Flattened row mask of the box dims x times.
  IndexSet box_mask(const DimSet& dims, const TimeSet& times) const;

 private:
  void check_bounds(std::size_t loc, std::size_t dim, std::size_t time) const;

  AxisLabels labels_;
  Orientation orientation_;
  std::vector<IndexSet> rows_;
};

using NamedFact = std::tuple<std::string, std::string, std::string>;

/// Resolves names against `labels`; duplicates collapse. Throws UnknownLabel.
DataCube build_cube(AxisLabels labels, const std::vector<NamedFact>& triples,
                    Orientation orientation = Orientation::by_time);

/// Throws IndexOutOfBounds.
SliceContext slice_at(const DataCube& cube, std::size_t time_idx);

/// Same facts, stored in the requested orientation.
DataCube reorient(const DataCube& cube, Orientation orientation);

/// Dyadic context with objects = locations and attributes = dimension x
/// timestamp pairs (layout given by DataCube::pair_index).
FormalContext flatten(const DataCube& cube);
/// Dyadic context with objects = dimensions and attributes = location x
/// timestamp pairs, index loc * |T| + time.
FormalContext dimension_context(const DataCube& cube);

PairSet loc_friendly(const DataCube& cube, const LocSet& locs);
PairSet dim_friendly(const DataCube& cube, const DimSet& dims);
PairSet time_friendly(const DataCube& cube, const TimeSet& times);

DimSet slice_up(const SliceContext& slice, const LocSet& locs);
LocSet slice_down(const SliceContext& slice, const DimSet& dims);
LocSet closure_locs(const SliceContext& slice, const LocSet& locs);
DimSet closure_dims(const SliceContext& slice, const DimSet& dims);

/// Builds a subset of the given axis from label names. Throws UnknownLabel.
IndexSet make_set(const AxisLabels& labels, Axis axis, const std::vector<std::string>& names);
std::vector<std::string> set_names(const AxisLabels& labels, Axis axis, const IndexSet& set);

}  // namespace agro
