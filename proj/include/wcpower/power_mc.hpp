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

#ifndef WCPOWER_POWER_MC_HPP
#define WCPOWER_POWER_MC_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "wcpower/committee.hpp"
#include "wcpower/errors.hpp"
#include "wcpower/parallel.hpp"
#include "wcpower/philox.hpp"
#include "wcpower/ranking.hpp"
#include "wcpower/rules.hpp"

namespace wcpower {

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  double confidence = 0.95;
  unsigned workers = 0;  ///< 0 = hardware threads; never changes the result

  void validate() const {
    if (samples == 0) throw validation_error("samples must be at least 1");
    if (!(confidence > 0.0 && confidence < 1.0))
      throw validation_error("confidence must lie strictly between 0 and 1");
  }
};

/// Sampled profiles per chunk. Chunk k draws from Philox stream k of the
/// configured seed, so results depend only on (seed, samples).
inline constexpr std::uint64_t kMcChunk = 4096;

/// Two-sided normal quantile, e.g. 1.959964 for 0.95.
inline double z_value(double confidence) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + confidence / 2.0);
}

struct McPlayerEstimate {
  std::int64_t hit_count = 0;
  double unnormalized = 0.0;  ///< hit rate, estimates the unnormalized index
  double normalized = 0.0;    ///< hit rate / dictator rate; not clamped
  double ci_half_width = 0.0; ///< on the normalized scale
  bool exceeds_unit = false;  ///< normalized > 1: too few samples
};

struct McPowerReport {
  Rule rule = Rule::plurality;
  int m = 0;
  std::vector<std::int64_t> weights;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double confidence = 0.95;
  double z = 0.0;
  std::string generator = Philox4x32::name;
  std::vector<McPlayerEstimate> players;
};

/// Estimates each player's influence under the impartial culture.
///
/// Every sample draws a uniform profile and its winner once; then, for each
/// player independently, one uniform replacement ranking different from the
/// current one is tried and a hit is recorded if the winner changes.
inline McPowerReport influence_mc(const Committee& committee, const McConfig& config) {
  config.validate();
  const int m = committee.m();
  const int n = committee.n();
  const auto rankings = all_rankings(m);
  const auto radix = static_cast<std::uint32_t>(rankings.size());

  auto hits = chunked_reduce(
      config.samples, kMcChunk, config.workers, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0),
      [&](std::uint64_t begin, std::uint64_t end, std::uint64_t chunk) {
        Philox4x32 rng(config.seed, chunk);
        std::vector<std::int64_t> local(static_cast<std::size_t>(n), 0);
        std::vector<Ranking> profile(static_cast<std::size_t>(n));
        std::vector<std::uint32_t> codes(static_cast<std::size_t>(n));
        for (std::uint64_t s = begin; s < end; ++s) {
          for (std::size_t i = 0; i < codes.size(); ++i) {
            codes[i] = rng.uniform_below(radix);
            profile[i] = rankings[codes[i]];
          }
          const int base = winner(committee, profile);
          for (std::size_t i = 0; i < codes.size(); ++i) {
            std::uint32_t other = rng.uniform_below(radix - 1);
            if (other >= codes[i]) ++other;
            profile[i] = rankings[other];
            if (winner(committee, profile) != base) ++local[i];
            profile[i] = rankings[codes[i]];
          }
        }
        return local;
      },
      [](std::vector<std::int64_t> acc, std::vector<std::int64_t> part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
        return acc;
      });

  McPowerReport report;
  report.rule = committee.rule();
  report.m = m;
  report.weights.assign(committee.weights().begin(), committee.weights().end());
  report.samples = config.samples;
  report.seed = config.seed;
  report.confidence = config.confidence;
  report.z = z_value(config.confidence);
  const double f = static_cast<double>(factorial(m));
  const double scale = (f - 1.0) / (f - static_cast<double>(factorial(m - 1)));
  const auto samples = static_cast<double>(config.samples);
  for (auto h : hits) {
    McPlayerEstimate e;
    e.hit_count = h;
    e.unnormalized = static_cast<double>(h) / samples;
    e.normalized = e.unnormalized * scale;
    e.ci_half_width = report.z * std::sqrt(e.unnormalized * (1.0 - e.unnormalized) / samples) * scale;
    e.exceeds_unit = e.normalized > 1.0;
    report.players.push_back(e);
  }
  return report;
}

struct Significance {
  double z = 0.0;
  bool significant = false;
};

/// Pooled two-proportion z-test on one player's hit rates in two
/// independent runs, at the first report's confidence level.
inline Significance difference_significant(const McPowerReport& a, const McPowerReport& b, int player) {
  if (a.m != b.m) throw validation_error("reports use different numbers of alternatives");
  if (player < 0 || player >= static_cast<int>(a.players.size()) || player >= static_cast<int>(b.players.size()))
    throw validation_error("player index " + std::to_string(player) + " out of range");
  const auto& pa = a.players[static_cast<std::size_t>(player)];
  const auto& pb = b.players[static_cast<std::size_t>(player)];
  const auto na = static_cast<double>(a.samples);
  const auto nb = static_cast<double>(b.samples);
  const double pooled = static_cast<double>(pa.hit_count + pb.hit_count) / (na + nb);
  const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / na + 1.0 / nb));
  Significance out;
  if (se > 0.0) out.z = (pa.unnormalized - pb.unnormalized) / se;
  out.significant = std::abs(out.z) >= z_value(a.confidence);
  return out;
}

}  // namespace wcpower

#endif  // WCPOWER_POWER_MC_HPP
