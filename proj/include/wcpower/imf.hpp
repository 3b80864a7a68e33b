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

#ifndef WCPOWER_IMF_HPP
#define WCPOWER_IMF_HPP

#include <array>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wcpower/committee.hpp"
#include "wcpower/errors.hpp"
#include "wcpower/format.hpp"
#include "wcpower/io.hpp"
#include "wcpower/power_mc.hpp"

namespace wcpower {

/// IMF Executive Board chair: one Executive Director voting the combined
/// share of its member or constituency, in basis points of total votes.
struct ImfMember {
  std::string label;
  std::int64_t pre_bp;   ///< before the 2010 quota reform
  std::int64_t post_bp;  ///< after it (Nauru included)

  friend bool operator==(const ImfMember&, const ImfMember&) = default;
};

/// The 24 chairs as of December 2018, constituencies named by their largest
/// member.
inline const std::vector<ImfMember>& imf_board() {
  static const std::vector<ImfMember> board{
      {"USA", 1672, 1647},
      {"Japan", 622, 613},
      {"China", 380, 607},
      {"Netherlands", 656, 541},
      {"Germany", 580, 531},
      {"Spain", 490, 529},
      {"Indonesia", 393, 433},
      {"Italy", 422, 412},
      {"France", 428, 402},
      {"United Kingdom", 428, 402},
      {"Korea", 348, 378},
      {"Canada", 359, 337},
      {"Sweden", 339, 328},
      {"Turkey", 291, 322},
      {"South Africa", 341, 309},
      {"Brazil", 261, 306},
      {"India", 280, 304},
      {"Switzerland", 294, 288},
      {"Russian Federation", 255, 283},
      {"Iran", 273, 254},
      {"United Arab Emirates", 257, 252},
      {"Saudi Arabia", 280, 201},
      {"Dem. Rep. Congo", 146, 162},
      {"Argentina", 184, 159},
  };
  return board;
}

enum class Era { pre, post };

inline Era parse_era(std::string_view s) {
  if (s == "pre") return Era::pre;
  if (s == "post") return Era::post;
  throw validation_error("unknown era '" + std::string(s) + "'; valid eras: pre, post");
}

constexpr std::string_view era_name(Era e) noexcept { return e == Era::pre ? "pre" : "post"; }

inline std::vector<std::int64_t> imf_weights(Era era, const std::vector<ImfMember>& board = imf_board()) {
  std::vector<std::int64_t> w;
  for (const auto& m : board) w.push_back(era == Era::pre ? m.pre_bp : m.post_bp);
  return w;
}

/// Board as a three-alternative committee under `rule`.
inline Committee imf_committee(Rule rule, Era era, const std::vector<ImfMember>& board = imf_board()) {
  return Committee(3, imf_weights(era, board), rule);
}

/// Basis points as a percentage with two decimals: 1672 -> "16.72".
inline std::string bp_to_percent(std::int64_t bp) {
  std::string frac = std::to_string(bp % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(bp / 100) + "." + frac;
}

/// Exact inverse of bp_to_percent; accepts up to two decimals.
inline std::int64_t percent_to_bp(std::string_view s) {
  const auto dot = s.find('.');
  const auto whole = s.substr(0, dot);
  std::string frac = dot == std::string_view::npos ? "" : std::string(s.substr(dot + 1));
  if (whole.empty() || frac.size() > 2) throw validation_error("malformed percentage '" + std::string(s) + "'");
  while (frac.size() < 2) frac += '0';
  std::int64_t v = 0;
  for (char c : std::string(whole) + frac) {
    if (c < '0' || c > '9') throw validation_error("malformed percentage '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

inline void export_imf_csv(const std::vector<ImfMember>& board, std::ostream& os) {
  os << "member,share_pre,share_post\n";
  for (const auto& m : board) os << m.label << ',' << bp_to_percent(m.pre_bp) << ',' << bp_to_percent(m.post_bp) << '\n';
}

inline std::vector<ImfMember> import_imf_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "member,share_pre,share_post")
    throw validation_error("IMF table must start with 'member,share_pre,share_post'");
  std::vector<ImfMember> board;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c2 = line.rfind(',');
    const auto c1 = c2 == std::string::npos ? std::string::npos : line.rfind(',', c2 - 1);
    if (c1 == std::string::npos) throw validation_error("malformed IMF row '" + line + "'");
    board.push_back({line.substr(0, c1), percent_to_bp(std::string_view(line).substr(c1 + 1, c2 - c1 - 1)),
                     percent_to_bp(std::string_view(line).substr(c2 + 1))});
  }
  return board;
}

/// Rules with reference board estimates.
inline constexpr std::array<Rule, 3> kImfRules{Rule::plurality, Rule::plurality_runoff, Rule::copeland};

inline bool imf_reference_rule(Rule r) {
  for (Rule x : kImfRules)
    if (x == r) return true;
  return false;
}

/// Seed of the run for one era; the two eras use distinct streams so their
/// estimates are independent.
constexpr std::uint64_t imf_era_seed(std::uint64_t seed, Era era) noexcept {
  return seed + (era == Era::post ? 1 : 0);
}

struct ImfRun {
  Rule rule;
  Era era;
  McPowerReport report;
};

inline std::vector<ImfRun> run_imf(const std::vector<Rule>& rules, const std::vector<Era>& eras,
                                   const McConfig& config, const std::vector<ImfMember>& board = imf_board()) {
  std::vector<ImfRun> runs;
  for (Rule r : rules)
    for (Era e : eras) {
      McConfig c = config;
      c.seed = imf_era_seed(config.seed, e);
      runs.push_back({r, e, influence_mc(imf_committee(r, e, board), c)});
    }
  return runs;
}

/// One row per chair: shares, then for each run its estimate and CI
/// half-width; with `diff`, a z-score and significance flag per rule that
/// has both eras.
inline void write_imf_csv(const std::vector<ImfRun>& runs, bool diff, const McConfig& config, OutputFormat format,
                          std::ostream& os, const std::vector<ImfMember>& board = imf_board()) {
  os << "# imf samples=" << config.samples << " seed=" << config.seed
     << " confidence=" << format_fixed(config.confidence, 4) << " generator=" << Philox4x32::name
     << " era_seeds=pre:+0,post:+1\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"member", "share_pre", "share_post"};
  for (const auto& run : runs) {
    const std::string col = std::string(rule_name(run.rule)) + "_" + std::string(era_name(run.era));
    header.push_back(col);
    header.push_back(col + "_ci");
  }
  struct Pair {
    Rule rule;
    const McPowerReport* pre;
    const McPowerReport* post;
  };
  std::vector<Pair> pairs;
  if (diff) {
    for (const auto& a : runs) {
      if (a.era != Era::pre) continue;
      for (const auto& b : runs)
        if (b.era == Era::post && b.rule == a.rule) pairs.push_back({a.rule, &a.report, &b.report});
    }
    for (const auto& p : pairs) {
      header.push_back(std::string(rule_name(p.rule)) + "_z");
      header.push_back(std::string(rule_name(p.rule)) + "_significant");
    }
  }
  rows.push_back(header);
  for (std::size_t i = 0; i < board.size(); ++i) {
    std::vector<std::string> row{board[i].label, bp_to_percent(board[i].pre_bp), bp_to_percent(board[i].post_bp)};
    for (const auto& run : runs) {
      const auto& p = run.report.players[i];
      row.push_back(format_fixed(p.normalized, format == OutputFormat::csv ? 6 : 4));
      row.push_back(format_fixed(p.ci_half_width, format == OutputFormat::csv ? 6 : 4));
    }
    for (const auto& p : pairs) {
      const auto s = difference_significant(*p.pre, *p.post, static_cast<int>(i));
      row.push_back(format_fixed(s.z, 3));
      row.push_back(s.significant ? "true" : "false");
    }
    rows.push_back(row);
  }
  if (format == OutputFormat::table) {
    detail::print_table(os, rows);
    return;
  }
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << '\n';
  }
}

}  // namespace wcpower

#endif  // WCPOWER_IMF_HPP
