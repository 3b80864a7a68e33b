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

#ifndef WCPOWER_POWER_EXACT_HPP
#define WCPOWER_POWER_EXACT_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wcpower/committee.hpp"
#include "wcpower/errors.hpp"
#include "wcpower/parallel.hpp"
#include "wcpower/ranking.hpp"
#include "wcpower/rational.hpp"
#include "wcpower/rules.hpp"

namespace wcpower {

struct ExactOptions {
  std::uint64_t cap = kDefaultEnumerationCap;  ///< max number of profiles
  unsigned workers = 0;                        ///< 0 = hardware threads
};

/// Profile codes enumerated per work item.
inline constexpr std::uint64_t kExactChunk = std::uint64_t{1} << 16;

/// Winner at every profile, indexed by profile code.
class OutcomeTable {
 public:
  OutcomeTable(ProfileCodec codec, std::vector<std::uint8_t> winners)
      : codec_(std::move(codec)), winners_(std::move(winners)) {}

  const ProfileCodec& codec() const noexcept { return codec_; }
  std::uint64_t size() const noexcept { return winners_.size(); }
  int operator[](std::uint64_t code) const noexcept { return winners_[code]; }
  std::span<const std::uint8_t> winners() const noexcept { return winners_; }

  friend bool operator==(const OutcomeTable& a, const OutcomeTable& b) noexcept {
    return a.codec_.m() == b.codec_.m() && a.codec_.n() == b.codec_.n() && a.winners_ == b.winners_;
  }

 private:
  ProfileCodec codec_;
  std::vector<std::uint8_t> winners_;
};

inline OutcomeTable build_outcome_table(const Committee& committee, const ExactOptions& options = {}) {
  ProfileCodec codec(committee.m(), committee.n(), options.cap);
  std::vector<std::uint8_t> winners(codec.size());
  parallel_chunks(codec.size(), kExactChunk, options.workers,
                  [&](std::uint64_t begin, std::uint64_t end, std::uint64_t) {
                    ProfileOdometer walk(codec, begin);
                    for (std::uint64_t code = begin; code < end; ++code, walk.advance())
                      winners[code] = static_cast<std::uint8_t>(winner(committee, walk.profile()));
                  });
  return OutcomeTable(std::move(codec), std::move(winners));
}

/// 1 iff replacing player i's ranking by `replacement` changes the winner.
inline bool delta_indicator(const Committee& committee, std::span<const Ranking> profile, int player,
                            const Ranking& replacement) {
  if (static_cast<int>(profile.size()) != committee.n()) throw validation_error("profile arity mismatch");
  if (player < 0 || player >= committee.n())
    throw validation_error("player index " + std::to_string(player) + " out of range");
  if (replacement.size() != committee.m()) throw validation_error("replacement ranking has the wrong size");
  if (replacement == profile[static_cast<std::size_t>(player)])
    throw validation_error("perturbation must differ from the player's current ranking");
  std::vector<Ranking> perturbed(profile.begin(), profile.end());
  perturbed[static_cast<std::size_t>(player)] = replacement;
  return winner(committee, profile) != winner(committee, perturbed);
}

/// Ordered (P, P'_i) pairs with a changed winner, per player.
///
/// With P_{-i} fixed, let c_a count the rankings of player i that make a
/// win. The number of ordered pairs of player-i rankings with different
/// winners is (m!)^2 - sum_a c_a^2; summing that over all slices gives the
/// full double sum without re-evaluating any rule.
inline std::vector<std::int64_t> swing_counts(const OutcomeTable& table, unsigned workers = 0) {
  const auto& codec = table.codec();
  const std::uint64_t radix = codec.radix();
  const std::uint64_t slices = codec.size() / radix;
  const auto m = static_cast<std::size_t>(codec.m());
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(codec.n()));
  for (int i = 0; i < codec.n(); ++i) {
    const std::uint64_t stride = codec.stride(i);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, kExactChunk / radix);
    const auto total = chunked_reduce(
        slices, chunk, workers, std::int64_t{0},
        [&](std::uint64_t begin, std::uint64_t end, std::uint64_t) {
          std::int64_t swings = 0;
          std::array<std::int64_t, kMaxAlternatives> counts{};
          for (std::uint64_t s = begin; s < end; ++s) {
            const std::uint64_t base = (s / stride) * stride * radix + s % stride;
            counts.fill(0);
            for (std::uint64_t k = 0; k < radix; ++k) ++counts[static_cast<std::size_t>(table[base + k * stride])];
            std::int64_t same = 0;
            for (std::size_t a = 0; a < m; ++a) same += counts[a] * counts[a];
            swings += static_cast<std::int64_t>(radix * radix) - same;
          }
          return swings;
        },
        [](std::int64_t a, std::int64_t b) { return a + b; });
    out.push_back(total);
  }
  return out;
}

/// Dictator's unnormalized value (m! - (m-1)!) / (m! - 1).
inline Rational dictator_rate(int m) {
  const auto f = static_cast<std::int64_t>(factorial(m));
  const auto g = static_cast<std::int64_t>(factorial(m - 1));
  return Rational(f - g, f - 1);
}

struct PlayerPower {
  std::int64_t swing_count = 0;
  Rational unnormalized;  ///< swings / ((m!)^n (m! - 1))
  Rational normalized;    ///< swings / ((m!)^n (m! - (m-1)!))

  double unnormalized_value() const noexcept { return unnormalized.to_double(); }
  double normalized_value() const noexcept { return normalized.to_double(); }
};

struct ExactPowerReport {
  Rule rule = Rule::plurality;
  int m = 0;
  std::vector<std::int64_t> weights;
  std::vector<PlayerPower> players;

  std::vector<Rational> normalized() const {
    std::vector<Rational> out;
    for (const auto& p : players) out.push_back(p.normalized);
    return out;
  }
};

inline ExactPowerReport make_exact_report(const Committee& committee, std::span<const std::int64_t> swings,
                                          std::uint64_t profile_count) {
  const auto f = static_cast<std::int64_t>(factorial(committee.m()));
  const auto g = static_cast<std::int64_t>(factorial(committee.m() - 1));
  const auto profiles = static_cast<std::int64_t>(profile_count);
  ExactPowerReport report;
  report.rule = committee.rule();
  report.m = committee.m();
  report.weights.assign(committee.weights().begin(), committee.weights().end());
  for (auto s : swings) {
    PlayerPower p;
    p.swing_count = s;
    p.unnormalized = Rational(s, profiles) * Rational(1, f - 1);
    p.normalized = Rational(s, profiles) * Rational(1, f - g);
    report.players.push_back(p);
  }
  return report;
}

/// Normalized and unnormalized influence of every player by full enumeration.
inline ExactPowerReport influence_exact(const Committee& committee, const ExactOptions& options = {}) {
  const OutcomeTable table = build_outcome_table(committee, options);
  const auto swings = swing_counts(table, options.workers);
  return make_exact_report(committee, swings, table.size());
}

/// One report per rule, indexed by rule_index().
inline std::array<ExactPowerReport, kRuleCount> influence_exact_all_rules(const Committee& committee,
                                                                         const ExactOptions& options = {}) {
  std::array<ExactPowerReport, kRuleCount> out;
  for (Rule r : kAllRules) out[rule_index(r)] = influence_exact(committee.with_rule(r), options);
  return out;
}

/// Penrose-Banzhaf index of the weighted majority game with quota w(N)/2:
/// the share of coalitions S of the other players with w(S) < w(N)/2 and
/// w(S) + w_i >= w(N)/2.
inline std::vector<Rational> pbi_binary(std::span<const std::int64_t> weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 1) throw validation_error("pbi_binary needs at least one player");
  if (n > 30) throw enumeration_too_large("pbi_binary enumerates 2^(n-1) coalitions; n must be at most 30");
  std::int64_t total = 0;
  for (auto w : weights) {
    if (w < 0) throw validation_error("weights must be nonnegative");
    total += w;
  }
  std::vector<Rational> out;
  const std::uint64_t coalitions = std::uint64_t{1} << (n - 1);
  for (int i = 0; i < n; ++i) {
    std::int64_t critical = 0;
    for (std::uint64_t mask = 0; mask < coalitions; ++mask) {
      std::int64_t ws = 0;
      for (int b = 0, j = 0; j < n; ++j) {
        if (j == i) continue;
        if ((mask >> b) & 1U) ws += weights[static_cast<std::size_t>(j)];
        ++b;
      }
      if (2 * ws < total && 2 * (ws + weights[static_cast<std::size_t>(i)]) >= total) ++critical;
    }
    out.emplace_back(critical, static_cast<std::int64_t>(coalitions));
  }
  return out;
}

/// For two alternatives every rule reduces to weighted majority with ties to
/// the first alternative; the index then equals the Penrose-Banzhaf index.
inline bool verify_pbi_coincidence(std::span<const std::int64_t> weights, Rule rule,
                                   const ExactOptions& options = {}) {
  const Committee committee(2, std::vector<std::int64_t>(weights.begin(), weights.end()), rule);
  return influence_exact(committee, options).normalized() == pbi_binary(weights);
}

}  // namespace wcpower

#endif  // WCPOWER_POWER_EXACT_HPP
