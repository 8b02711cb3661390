#include "agrolattice/rules.hpp"

#include <algorithm>
#include <charconv>

#include "agrolattice/errors.hpp"

namespace agro {

namespace {

using u128 = unsigned __int128;

std::uint64_t parse_uint(std::string_view digits, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw Error("invalid ratio '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Ratio Ratio::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Ratio r{parse_uint(text.substr(0, slash), text), parse_uint(text.substr(slash + 1), text)};
    if (r.den == 0) throw Error("ratio '" + std::string(text) + "' has zero denominator");
    return r;
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return {parse_uint(text, text), 1};
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 18 || (whole.empty() && frac.empty())) throw Error("invalid ratio '" + std::string(text) + "'");
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::uint64_t w = whole.empty() ? 0 : parse_uint(whole, text);
  const std::uint64_t f = frac.empty() ? 0 : parse_uint(frac, text);
  return {w * den + f, den};
}

std::string Ratio::decimal(int places) const {
  u128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const u128 scaled = (static_cast<u128>(num) * scale * 2 + den) / (static_cast<u128>(den) * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

bool operator==(const Ratio& a, const Ratio& b) {
  return static_cast<u128>(a.num) * b.den == static_cast<u128>(b.num) * a.den;
}

bool operator<(const Ratio& a, const Ratio& b) {
  return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}

std::string_view denominator_name(SupportDenominator d) {
  return d == SupportDenominator::locations ? "locations" : "dimensions";
}

SupportDenominator parse_denominator(std::string_view text) {
  if (text == "locations") return SupportDenominator::locations;
  if (text == "dimensions") return SupportDenominator::dimensions;
  throw Error("unknown support denominator '" + std::string(text) + "'");
}

bool rule_less(const AssociationRule& a, const AssociationRule& b) {
  if (!(a.antecedent == b.antecedent)) return a.antecedent < b.antecedent;
  if (!(a.consequent == b.consequent)) return a.consequent < b.consequent;
  return a.times < b.times;
}

RuleSet::RuleSet(std::vector<AssociationRule> rules) : rules_(std::move(rules)) {
  // stable so the first-emitted source triple survives deduplication
  std::stable_sort(rules_.begin(), rules_.end(), rule_less);
  rules_.erase(std::unique(rules_.begin(), rules_.end(),
                           [](const AssociationRule& a, const AssociationRule& b) { return a.same_rule(b); }),
               rules_.end());
}

std::size_t holder_count(const DataCube& cube, const DimSet& dims, const TimeSet& times) {
  const IndexSet mask = cube.box_mask(dims, times);
  std::size_t n = 0;
  for (std::size_t l = 0; l < cube.num_locations(); ++l)
    if (mask.is_subset_of(cube.flat_row(l))) ++n;
  return n;
}

Ratio support(const DataCube& cube, const AssociationRule& rule, SupportDenominator denominator) {
  const std::size_t holders = holder_count(cube, rule.antecedent | rule.consequent, rule.times);
  const std::size_t den =
      denominator == SupportDenominator::locations ? cube.num_locations() : cube.num_dimensions();
  return {holders, den};
}

Ratio confidence(const DataCube& cube, const AssociationRule& rule) {
  const std::size_t base = holder_count(cube, rule.antecedent, rule.times);
  if (base == 0) throw UndefinedConfidence("no location holds the antecedent at the rule's timestamps");
  return {holder_count(cube, rule.antecedent | rule.consequent, rule.times), base};
}

RuleSet generate_rules(const DataCube& cube, const TripleSet& triples, const RuleOptions& options) {
  std::vector<AssociationRule> out;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const AgroTriple& tr = triples[i];
    if (options.target_times && !options.target_times->is_subset_of(tr.times)) continue;
    if (tr.intent.size() < 2) continue;
    tr.intent.for_each([&](std::size_t target) {
      if (options.target_dims && !options.target_dims->contains(target)) return;
      AssociationRule rule{tr.intent, IndexSet(cube.num_dimensions(), {target}), tr.times, {}, {}, i};
      rule.antecedent.erase(target);
      rule.support = support(cube, rule, options.denominator);
      rule.confidence = confidence(cube, rule);
      out.push_back(std::move(rule));
    });
  }
  return RuleSet(std::move(out));
}

RuleSet filter_rules(const RuleSet& rules, const Ratio& min_support, const Ratio& min_confidence) {
  std::vector<AssociationRule> kept;
  for (const auto& r : rules)
    if (r.support >= min_support && r.confidence >= min_confidence) kept.push_back(r);
  return RuleSet(std::move(kept));
}

}  // namespace agro
