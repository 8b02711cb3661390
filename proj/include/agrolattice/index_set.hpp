#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace agro {

/// A subset of {0, ..., universe-1} stored as a packed bitset.
///
/// Iteration is always in ascending index order, and comparison with
/// operator< is lexicographic over the ascending member sequences, which is
/// the canonical order used for every set-valued output of the library.
class IndexSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t bits_per_word = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members);
  IndexSet(std::size_t universe, std::span<const std::size_t> members);

  static IndexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const {
    return i < universe_ && (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);
  void clear();

  std::size_t size() const;
  bool empty() const;
  bool is_full() const { return size() == universe_; }

  bool is_subset_of(const IndexSet& other) const;
  bool is_strict_subset_of(const IndexSet& other) const { return is_subset_of(other) && size() < other.size(); }
  bool intersects(const IndexSet& other) const;

  IndexSet& operator&=(const IndexSet& other);
  IndexSet& operator|=(const IndexSet& other);
  /// Set difference.
  IndexSet& operator-=(const IndexSet& other);
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  /// True iff this set and `other` agree on every index below `bound`.
  bool agrees_below(const IndexSet& other, std::size_t bound) const;

  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        const int off = std::countr_zero(bits);
        fn(w * bits_per_word + static_cast<std::size_t>(off));
        bits &= bits - 1;
      }
    }
  }

  std::span<const word_type> words() const { return words_; }
  std::size_t hash() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator<(const IndexSet& a, const IndexSet& b);

 private:
  static std::size_t word_count(std::size_t universe) { return (universe + bits_per_word - 1) / bits_per_word; }
  void trim();

  std::size_t universe_ = 0;
  std::vector<word_type> words_;
};

using LocSet = IndexSet;
using DimSet = IndexSet;
using TimeSet = IndexSet;

}  // namespace agro

template <>
struct std::hash<agro::IndexSet> {
  std::size_t operator()(const agro::IndexSet& s) const noexcept { return s.hash(); }
};
