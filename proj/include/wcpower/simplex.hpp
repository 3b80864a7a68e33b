// Copyright 2026 The wcpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WCPOWER_SIMPLEX_HPP
#define WCPOWER_SIMPLEX_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wcpower/committee.hpp"
#include "wcpower/errors.hpp"
#include "wcpower/format.hpp"
#include "wcpower/parallel.hpp"
#include "wcpower/power_exact.hpp"
#include "wcpower/rational.hpp"

namespace wcpower {

using WeightTriple = std::array<std::int64_t, 3>;
using InfluenceVector = std::array<Rational, 3>;
/// Normalized influence of the three players, per rule (rule_index order).
using PointInfluence = std::array<InfluenceVector, kRuleCount>;

/// Divides out the gcd; committees (w) and (c w) are equivalent.
inline WeightTriple reduce_weights(WeightTriple w) {
  const std::int64_t g = std::gcd(std::gcd(w[0], w[1]), w[2]);
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

inline PointInfluence compute_point_influence(const WeightTriple& w, int m, const ExactOptions& options = {}) {
  const Committee committee(m, {w[0], w[1], w[2]}, Rule::plurality);
  const auto reports = influence_exact_all_rules(committee, options);
  PointInfluence out;
  for (Rule r : kAllRules)
    for (std::size_t i = 0; i < 3; ++i) out[rule_index(r)][i] = reports[rule_index(r)].players[i].normalized;
  return out;
}

/// Exact influence values keyed by gcd-reduced weight triple, persistable
/// as a JSON document.
class InfluenceCache {
 public:
  static constexpr const char* kFormat = "wcpower-influence-cache/1";

  explicit InfluenceCache(int m = 3) : m_(m) {}

  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return entries_.size(); }

  const PointInfluence* find(const WeightTriple& w) const {
    const auto it = entries_.find(reduce_weights(w));
    return it == entries_.end() ? nullptr : &it->second;
  }

  void insert(const WeightTriple& w, const PointInfluence& values) { entries_[reduce_weights(w)] = values; }

  nlohmann::json to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, values] : entries_) {
      nlohmann::json e;
      e["weights"] = key;
      for (Rule r : kAllRules) {
        nlohmann::json v = nlohmann::json::array();
        for (const auto& q : values[rule_index(r)]) v.push_back(q.str());
        e[std::string(rule_name(r))] = v;
      }
      entries.push_back(std::move(e));
    }
    return {{"format", kFormat}, {"m", m_}, {"entries", std::move(entries)}};
  }

  static InfluenceCache from_json(const nlohmann::json& doc) {
    try {
      if (doc.at("format").get<std::string>() != kFormat) throw validation_error("unsupported cache format");
      InfluenceCache cache(doc.at("m").get<int>());
      for (const auto& e : doc.at("entries")) {
        const auto key = e.at("weights").get<WeightTriple>();
        PointInfluence values;
        for (Rule r : kAllRules) {
          const auto& v = e.at(std::string(rule_name(r)));
          if (v.size() != 3) throw validation_error("cache entry must hold three values per rule");
          for (std::size_t i = 0; i < 3; ++i) values[rule_index(r)][i] = Rational::parse(v[i].get<std::string>());
        }
        cache.entries_[reduce_weights(key)] = values;
      }
      return cache;
    } catch (const nlohmann::json::exception& ex) {
      throw validation_error(std::string("malformed influence cache: ") + ex.what());
    }
  }

  void save(const std::string& path) const { write_text_file(path, to_json().dump(1) + "\n"); }

  static InfluenceCache load(const std::string& path) {
    const auto text = read_text_file(path);
    try {
      return from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& ex) {
      throw validation_error("malformed influence cache '" + path + "': " + ex.what());
    }
  }

 private:
  int m_;
  std::map<WeightTriple, PointInfluence> entries_;
};

/// All (w1, w2, w3) >= 0 with w1 + w2 + w3 = D, with exact influence under
/// every rule at each point.
struct SimplexGrid {
  int resolution = 0;
  int m = 3;
  std::vector<WeightTriple> points;
  std::vector<PointInfluence> values;

  std::size_t index_of(const WeightTriple& w) const {
    const auto it = std::find(points.begin(), points.end(), w);
    if (it == points.end()) throw validation_error("weight triple not on the grid");
    return static_cast<std::size_t>(it - points.begin());
  }

  const Rational& influence(std::size_t point, Rule rule, int player) const {
    return values[point][rule_index(rule)][static_cast<std::size_t>(player)];
  }
};

inline std::vector<WeightTriple> simplex_points(int resolution) {
  std::vector<WeightTriple> pts;
  for (std::int64_t w1 = resolution; w1 >= 0; --w1)
    for (std::int64_t w2 = resolution - w1; w2 >= 0; --w2) pts.push_back({w1, w2, resolution - w1 - w2});
  return pts;
}

struct ScanOptions {
  unsigned workers = 0;
  InfluenceCache* cache = nullptr;  ///< consulted and extended when set
};

/// Points sharing a gcd-reduced triple are computed once.
inline SimplexGrid scan_simplex(int resolution, int m = 3, const ScanOptions& options = {}) {
  if (resolution <= 0) throw validation_error("resolution must be positive");
  check_alternative_count(m);
  InfluenceCache local(m);
  InfluenceCache& cache = options.cache ? *options.cache : local;
  if (cache.m() != m) throw validation_error("influence cache was built for a different number of alternatives");

  SimplexGrid grid;
  grid.resolution = resolution;
  grid.m = m;
  grid.points = simplex_points(resolution);

  std::vector<WeightTriple> missing;
  for (const auto& p : grid.points) {
    const auto key = reduce_weights(p);
    if (!cache.find(key) && std::find(missing.begin(), missing.end(), key) == missing.end()) missing.push_back(key);
  }
  std::vector<PointInfluence> computed(missing.size());
  parallel_chunks(missing.size(), 1, options.workers, [&](std::uint64_t begin, std::uint64_t end, std::uint64_t) {
    for (auto k = begin; k < end; ++k) computed[k] = compute_point_influence(missing[k], m, {kDefaultEnumerationCap, 1});
  });
  for (std::size_t k = 0; k < missing.size(); ++k) cache.insert(missing[k], computed[k]);

  grid.values.reserve(grid.points.size());
  for (const auto& p : grid.points) grid.values.push_back(*cache.find(p));
  return grid;
}

enum class Comparison : std::int8_t { b_greater = -1, equal = 0, a_greater = 1 };

constexpr std::string_view comparison_name(Comparison c) noexcept {
  switch (c) {
    case Comparison::a_greater: return "A_GREATER";
    case Comparison::equal: return "EQUAL";
    case Comparison::b_greater: return "B_GREATER";
  }
  return "?";
}

constexpr Comparison operator-(Comparison c) noexcept { return static_cast<Comparison>(-static_cast<int>(c)); }

struct PairwiseClassification {
  Rule rule_a = Rule::borda;
  Rule rule_b = Rule::plurality;
  int player = 0;
  int resolution = 0;
  std::vector<WeightTriple> points;
  std::vector<Comparison> classes;
  std::vector<Rational> diffs;  ///< I(rule_a) - I(rule_b)

  Rational max_abs_diff() const {
    Rational best;
    for (const auto& d : diffs) best = std::max(best, d.abs());
    return best;
  }
};

/// Sign of I_player(a) - I_player(b) at each grid point, decided exactly.
inline PairwiseClassification classify_pairwise(const SimplexGrid& grid, Rule a, Rule b, int player) {
  if (player < 0 || player > 2) throw validation_error("player must be 0, 1 or 2");
  PairwiseClassification out;
  out.rule_a = a;
  out.rule_b = b;
  out.player = player;
  out.resolution = grid.resolution;
  out.points = grid.points;
  for (std::size_t k = 0; k < grid.points.size(); ++k) {
    const Rational diff = grid.influence(k, a, player) - grid.influence(k, b, player);
    out.diffs.push_back(diff);
    out.classes.push_back(static_cast<Comparison>(diff.sign()));
  }
  return out;
}

/// Subset of the five rules as a bitmask over rule_index().
class RuleSet {
 public:
  constexpr RuleSet() = default;
  constexpr explicit RuleSet(std::uint8_t mask) : mask_(mask) {}

  static constexpr RuleSet all() { return RuleSet((1U << kRuleCount) - 1); }

  constexpr void insert(Rule r) { mask_ = static_cast<std::uint8_t>(mask_ | (1U << rule_index(r))); }
  constexpr bool contains(Rule r) const { return (mask_ >> rule_index(r)) & 1U; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr std::uint8_t mask() const { return mask_; }

  /// "P+B", in rule order.
  std::string str() const {
    std::string s;
    for (Rule r : kAllRules) {
      if (!contains(r)) continue;
      if (!s.empty()) s += '+';
      s += rule_abbreviation(r);
    }
    return s;
  }

  friend constexpr auto operator<=>(const RuleSet&, const RuleSet&) = default;

 private:
  std::uint8_t mask_ = 0;
};

struct BestRuleMap {
  int player = 0;
  int resolution = 0;
  std::vector<WeightTriple> points;
  std::vector<RuleSet> best;

  std::vector<RuleSet> distinct_sets() const {
    std::vector<RuleSet> sets(best.begin(), best.end());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
  }
};

/// Rules attaining the maximal influence for `player` at each point.
inline BestRuleMap best_rule_map(const SimplexGrid& grid, int player) {
  if (player < 0 || player > 2) throw validation_error("player must be 0, 1 or 2");
  BestRuleMap out;
  out.player = player;
  out.resolution = grid.resolution;
  out.points = grid.points;
  for (std::size_t k = 0; k < grid.points.size(); ++k) {
    Rational best = grid.influence(k, kAllRules[0], player);
    for (Rule r : kAllRules) best = std::max(best, grid.influence(k, r, player));
    RuleSet set;
    for (Rule r : kAllRules)
      if (grid.influence(k, r, player) == best) set.insert(r);
    out.best.push_back(set);
  }
  return out;
}

inline void write_classification_csv(const PairwiseClassification& c, std::ostream& os) {
  os << "w1,w2,w3,class,diff_numerator,diff_denominator\n";
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    const auto& p = c.points[k];
    os << p[0] << ',' << p[1] << ',' << p[2] << ',' << comparison_name(c.classes[k]) << ',' << c.diffs[k].num()
       << ',' << c.diffs[k].den() << '\n';
  }
}

inline void write_best_rule_csv(const BestRuleMap& map, const SimplexGrid& grid, std::ostream& os) {
  os << "w1,w2,w3,best_rules";
  for (Rule r : kAllRules) os << ",I_" << rule_abbreviation(r);
  os << '\n';
  for (std::size_t k = 0; k < map.points.size(); ++k) {
    const auto& p = map.points[k];
    os << p[0] << ',' << p[1] << ',' << p[2] << ',' << map.best[k].str();
    for (Rule r : kAllRules) os << ',' << grid.influence(k, r, map.player).str();
    os << '\n';
  }
}

}  // namespace wcpower

#endif  // WCPOWER_SIMPLEX_HPP
