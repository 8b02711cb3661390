#include "agrolattice/index_set.hpp"

#include <stdexcept>

namespace agro {

IndexSet::IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : IndexSet(universe) {
  for (std::size_t m : members) insert(m);
}

IndexSet::IndexSet(std::size_t universe, std::span<const std::size_t> members) : IndexSet(universe) {
  for (std::size_t m : members) insert(m);
}

IndexSet IndexSet::full(std::size_t universe) {
  IndexSet s(universe);
  for (auto& w : s.words_) w = ~word_type{0};
  s.trim();
  return s;
}

void IndexSet::insert(std::size_t i) {
  if (i >= universe_) throw std::out_of_range("IndexSet::insert: index out of universe");
  words_[i / bits_per_word] |= word_type{1} << (i % bits_per_word);
}

void IndexSet::erase(std::size_t i) {
  if (i >= universe_) return;
  words_[i / bits_per_word] &= ~(word_type{1} << (i % bits_per_word));
}

void IndexSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t IndexSet::size() const {
  std::size_t n = 0;
  for (word_type w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool IndexSet::empty() const {
  for (word_type w : words_)
    if (w != 0) return false;
  return true;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const word_type rhs = w < other.words_.size() ? other.words_[w] : 0;
    if ((words_[w] & ~rhs) != 0) return false;
  }
  return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
  return *this;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
  if (other.universe_ > universe_) throw std::invalid_argument("IndexSet union: universe mismatch");
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool IndexSet::agrees_below(const IndexSet& other, std::size_t bound) const {
  const std::size_t full_words = bound / bits_per_word;
  for (std::size_t w = 0; w < full_words && w < words_.size(); ++w)
    if (words_[w] != other.words_[w]) return false;
  const std::size_t rem = bound % bits_per_word;
  if (rem != 0 && full_words < words_.size()) {
    const word_type mask = (word_type{1} << rem) - 1;
    if (((words_[full_words] ^ other.words_[full_words]) & mask) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t IndexSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (word_type w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void IndexSet::trim() {
  const std::size_t rem = universe_ % bits_per_word;
  if (rem != 0 && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
}

// Lexicographic order of ascending member sequences. Locate the lowest index
// where the two sets differ; the set owning that index is smaller exactly when
// the other set still has members above it (otherwise the other set is a
// proper prefix).
bool operator<(const IndexSet& a, const IndexSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  const std::size_t n = a.words_.size();
  for (std::size_t w = 0; w < n; ++w) {
    const IndexSet::word_type diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const int off = std::countr_zero(diff);
    const IndexSet::word_type low_bit = IndexSet::word_type{1} << off;
    const bool in_a = (a.words_[w] & low_bit) != 0;
    const IndexSet& other = in_a ? b : a;
    // Does `other` have any member above the differing index?
    bool other_has_more = (other.words_[w] >> off >> 1) != 0;
    for (std::size_t v = w + 1; !other_has_more && v < n; ++v) other_has_more = other.words_[v] != 0;
    return in_a ? other_has_more : !other_has_more;
  }
  return false;
}

}  // namespace agro
