#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "agrolattice/cube.hpp"
#include "agrolattice/index_set.hpp"

namespace agro {

/// A closed spatio-temporal box (extent, intent, times).
struct AgroTriple {
  LocSet extent;
  DimSet intent;
  TimeSet times;

  friend bool operator==(const AgroTriple&, const AgroTriple&) = default;
  /// Canonical order: lexicographic by extent, then intent, then times.
  friend bool operator<(const AgroTriple& a, const AgroTriple& b);
};

/// Canonically ordered, duplicate-free list of triples.
class TripleSet {
 public:
  TripleSet() = default;
  /// Sorts and deduplicates.
  explicit TripleSet(std::vector<AgroTriple> triples);

  const std::vector<AgroTriple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const AgroTriple& operator[](std::size_t i) const { return triples_[i]; }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  bool contains(const AgroTriple& t) const;
  /// Position of `t`, or size() when absent.
  std::size_t find(const AgroTriple& t) const;

  friend bool operator==(const TripleSet&, const TripleSet&) = default;

 private:
  std::vector<AgroTriple> triples_;
};

struct DyadicConcept {
  IndexSet extent;
  IndexSet intent;

  friend bool operator==(const DyadicConcept&, const DyadicConcept&) = default;
  friend bool operator<(const DyadicConcept& a, const DyadicConcept& b) {
    if (a.extent == b.extent) return a.intent < b.intent;
    return a.extent < b.extent;
  }
};

/// Every formal concept of `context`, including those with an empty side,
/// in canonical (extent, intent) order.
std::vector<DyadicConcept> enumerate_formal_concepts(const FormalContext& context);

/// Concepts of one slice with non-empty extent and intent.
std::vector<DyadicConcept> enumerate_slice_concepts(const SliceContext& slice);

/// All maximal full boxes of the cube with three non-empty components.
TripleSet enumerate_agro_triples(const DataCube& cube);

struct OracleOptions {
  /// Upper bound on the number of (dimension subset, timestamp subset)
  /// candidates the oracle may visit.
  std::uint64_t budget = std::uint64_t{1} << 24;
};

/// Exhaustive reference enumeration over every dimension subset x timestamp
/// subset. Throws BudgetExceeded when 2^(|J|+|T|) exceeds the budget.
TripleSet oracle_enumerate(const DataCube& cube, const OracleOptions& options = {});

/// Box property plus maximality along each axis.
bool is_maximal_box(const DataCube& cube, const AgroTriple& triple);

}  // namespace agro
