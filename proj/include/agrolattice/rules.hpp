#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agrolattice/concepts.hpp"
#include "agrolattice/cube.hpp"

namespace agro {

/// Non-negative exact fraction. Kept unreduced so the counts behind a
/// support or confidence value stay visible; comparisons are by value.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Parses "p/q" or a decimal such as "0.7" exactly.
  static Ratio parse(std::string_view text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// Decimal rendering rounded half-up to `places` digits.
  std::string decimal(int places = 6) const;
  std::string fraction() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Ratio& a, const Ratio& b);
  friend bool operator<(const Ratio& a, const Ratio& b);
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
};

enum class SupportDenominator { locations, dimensions };

std::string_view denominator_name(SupportDenominator d);
SupportDenominator parse_denominator(std::string_view text);

/// antecedent ->_times consequent, drawn from one agro-triple.
struct AssociationRule {
  DimSet antecedent;
  DimSet consequent;
  TimeSet times;
  Ratio support;
  Ratio confidence;
  /// Index of the originating triple in its TripleSet.
  std::size_t source_triple = 0;

  bool same_rule(const AssociationRule& other) const {
    return antecedent == other.antecedent && consequent == other.consequent && times == other.times;
  }
};

/// Canonical order over (antecedent, consequent, times).
bool rule_less(const AssociationRule& a, const AssociationRule& b);

class RuleSet {
 public:
  RuleSet() = default;
  /// Sorts canonically and drops repeats of the same (antecedent, consequent, times).
  explicit RuleSet(std::vector<AssociationRule> rules);

  const std::vector<AssociationRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const AssociationRule& operator[](std::size_t i) const { return rules_[i]; }
  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }

 private:
  std::vector<AssociationRule> rules_;
};

struct RuleOptions {
  /// Consequent candidates; every intent member when unset.
  std::optional<DimSet> target_dims;
  /// A triple qualifies only if its time set covers these.
  std::optional<TimeSet> target_times;
  SupportDenominator denominator = SupportDenominator::locations;
};

/// For each triple (l, j, t) and each target d in j, emits (j \ {d}) ->_t {d}
/// with support and confidence filled in. Singleton intents yield nothing.
RuleSet generate_rules(const DataCube& cube, const TripleSet& triples, const RuleOptions& options = {});

/// Number of locations holding every dimension in `dims` at every time in `times`.
std::size_t holder_count(const DataCube& cube, const DimSet& dims, const TimeSet& times);

Ratio support(const DataCube& cube, const AssociationRule& rule, SupportDenominator denominator);
/// Throws UndefinedConfidence when nobody holds the antecedent at rule.times.
Ratio confidence(const DataCube& cube, const AssociationRule& rule);

/// Keeps rules meeting both minimums; order preserved.
RuleSet filter_rules(const RuleSet& rules, const Ratio& min_support, const Ratio& min_confidence);

}  // namespace agro
