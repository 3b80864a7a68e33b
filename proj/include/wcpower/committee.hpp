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

#ifndef WCPOWER_COMMITTEE_HPP
#define WCPOWER_COMMITTEE_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcpower/errors.hpp"
#include "wcpower/ranking.hpp"

namespace wcpower {

enum class Rule : std::uint8_t { plurality, plurality_runoff, borda, copeland, schulze };

inline constexpr int kRuleCount = 5;
inline constexpr std::array<Rule, kRuleCount> kAllRules{Rule::plurality, Rule::plurality_runoff, Rule::borda,
                                                        Rule::copeland, Rule::schulze};

constexpr std::size_t rule_index(Rule r) noexcept { return static_cast<std::size_t>(r); }

constexpr std::string_view rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::plurality: return "plurality";
    case Rule::plurality_runoff: return "plurality-runoff";
    case Rule::borda: return "borda";
    case Rule::copeland: return "copeland";
    case Rule::schulze: return "schulze";
  }
  return "?";
}

/// P, PR, B, C, S
constexpr std::string_view rule_abbreviation(Rule r) noexcept {
  switch (r) {
    case Rule::plurality: return "P";
    case Rule::plurality_runoff: return "PR";
    case Rule::borda: return "B";
    case Rule::copeland: return "C";
    case Rule::schulze: return "S";
  }
  return "?";
}

inline Rule parse_rule(std::string_view name) {
  for (Rule r : kAllRules)
    if (rule_name(r) == name) return r;
  std::string valid;
  for (Rule r : kAllRules) {
    if (!valid.empty()) valid += ", ";
    valid += rule_name(r);
  }
  throw validation_error("unknown rule '" + std::string(name) + "'; valid rules: " + valid);
}

/// Upper bound on w(N); keeps every weighted tally (at most w(N) * (m - 1))
/// far inside 64 bits.
inline constexpr std::int64_t kMaxTotalWeight = std::int64_t{1} << 40;

/// Weighted committee (N, A, r|w): alternatives, nonnegative integer player
/// weights and an anonymous rule.
class Committee {
 public:
  Committee(int m, std::vector<std::int64_t> weights, Rule rule, std::vector<std::string> labels = {})
      : m_(m), weights_(std::move(weights)), rule_(rule), labels_(std::move(labels)) {
    check_alternative_count(m_);
    if (labels_.empty()) labels_ = default_labels(m_);
    if (static_cast<int>(labels_.size()) != m_)
      throw validation_error("expected " + std::to_string(m_) + " labels, got " + std::to_string(labels_.size()));
    std::set<std::string_view> unique;
    for (const auto& l : labels_) {
      if (l.empty()) throw validation_error("alternative labels must be nonempty");
      if (l.find('>') != std::string::npos || l.find(' ') != std::string::npos)
        throw validation_error("alternative label '" + l + "' may not contain '>' or spaces");
      if (!unique.insert(l).second) throw validation_error("duplicate alternative label '" + l + "'");
    }
    if (weights_.empty()) throw validation_error("a committee needs at least one player");
    std::int64_t total = 0;
    for (auto w : weights_) {
      if (w < 0) throw validation_error("weights must be nonnegative, got " + std::to_string(w));
      if (w > kMaxTotalWeight - total) throw validation_error("total weight exceeds 2^40");
      total += w;
    }
    if (total < 1) throw validation_error("total weight must be at least 1");
    total_ = total;
  }

  int m() const noexcept { return m_; }
  int n() const noexcept { return static_cast<int>(weights_.size()); }
  Rule rule() const noexcept { return rule_; }
  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  std::int64_t weight(int player) const noexcept { return weights_[static_cast<std::size_t>(player)]; }
  std::int64_t total_weight() const noexcept { return total_; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(int alternative) const { return labels_.at(static_cast<std::size_t>(alternative)); }

  Committee with_rule(Rule r) const {
    Committee c = *this;
    c.rule_ = r;
    return c;
  }

  Committee with_weights(std::vector<std::int64_t> w) const { return Committee(m_, std::move(w), rule_, labels_); }

  Committee with_alternatives(int m) const { return Committee(m, weights_, rule_); }

 private:
  int m_;
  std::vector<std::int64_t> weights_;
  Rule rule_;
  std::vector<std::string> labels_;
  std::int64_t total_ = 0;
};

}  // namespace wcpower

#endif  // WCPOWER_COMMITTEE_HPP
