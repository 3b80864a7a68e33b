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

#ifndef WCPOWER_IO_HPP
#define WCPOWER_IO_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wcpower/committee.hpp"
#include "wcpower/errors.hpp"
#include "wcpower/format.hpp"
#include "wcpower/power_exact.hpp"
#include "wcpower/power_mc.hpp"

namespace wcpower {

// ---------------------------------------------------------------------------
// Committee spec files
//
//   {"alternatives": ["a", "b", "c"], "weights": [6, 5, 3], "rule": "borda"}
//
// "m": 3 may replace "alternatives", in which case labels default to a, b, ...

inline constexpr int kSpecMaxAlternatives = 5;

inline Committee committee_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw validation_error("committee spec must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "m" && key != "alternatives" && key != "weights" && key != "rule")
      throw validation_error("unknown committee spec field '" + key + "'");
  }
  try {
    std::vector<std::string> labels;
    int m = 0;
    if (doc.contains("alternatives")) {
      labels = doc.at("alternatives").get<std::vector<std::string>>();
      m = static_cast<int>(labels.size());
      if (doc.contains("m") && doc.at("m").get<int>() != m)
        throw validation_error("'m' disagrees with the number of alternatives");
    } else if (doc.contains("m")) {
      m = doc.at("m").get<int>();
    } else {
      throw validation_error("committee spec needs 'alternatives' or 'm'");
    }
    if (m < 2 || m > kSpecMaxAlternatives)
      throw validation_error("committee spec must have 2 to 5 alternatives, got " + std::to_string(m));
    if (!doc.contains("weights")) throw validation_error("committee spec needs 'weights'");
    if (!doc.contains("rule")) throw validation_error("committee spec needs 'rule'");
    const auto& w = doc.at("weights");
    if (!w.is_array()) throw validation_error("'weights' must be an array of integers");
    std::vector<std::int64_t> weights;
    for (const auto& x : w) {
      if (!x.is_number_integer()) throw validation_error("'weights' must be an array of integers");
      weights.push_back(x.get<std::int64_t>());
    }
    return Committee(m, std::move(weights), parse_rule(doc.at("rule").get<std::string>()), std::move(labels));
  } catch (const nlohmann::json::exception& ex) {
    throw validation_error(std::string("malformed committee spec: ") + ex.what());
  }
}

inline nlohmann::json committee_to_json(const Committee& c) {
  return {{"alternatives", std::vector<std::string>(c.labels().begin(), c.labels().end())},
          {"weights", std::vector<std::int64_t>(c.weights().begin(), c.weights().end())},
          {"rule", std::string(rule_name(c.rule()))}};
}

inline Committee parse_committee_spec(const std::string& text) {
  try {
    return committee_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& ex) {
    throw validation_error(std::string("committee spec is not valid JSON: ") + ex.what());
  }
}

inline Committee load_committee(const std::string& path) { return parse_committee_spec(read_text_file(path)); }

// ---------------------------------------------------------------------------
// Report output

enum class OutputFormat { csv, table };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  throw validation_error("unknown format '" + s + "'; valid formats: csv, table");
}

namespace detail {

inline std::string pad(std::string s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  return left ? s + std::string(width - s.size(), ' ') : std::string(width - s.size(), ' ') + s;
}

/// Right-aligned columns, first column left-aligned.
inline void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (width.size() <= k) width.push_back(0);
      width[k] = std::max(width[k], r[k].size());
    }
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "  " : "") << pad(r[k], width[k], k == 0);
    os << '\n';
  }
}

}  // namespace detail

inline void write_exact_report(const ExactPowerReport& report, OutputFormat format, std::ostream& os) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"player", "weight", "swing_count", "unnormalized_exact", "normalized_exact", "normalized_float"});
  for (std::size_t i = 0; i < report.players.size(); ++i) {
    const auto& p = report.players[i];
    rows.push_back({std::to_string(i + 1), std::to_string(report.weights[i]), std::to_string(p.swing_count),
                    p.unnormalized.str(), p.normalized.str(), format_fixed(p.normalized_value(), 4)});
  }
  if (format == OutputFormat::table) {
    os << "rule: " << rule_name(report.rule) << ", m = " << report.m << '\n';
    detail::print_table(os, rows);
    return;
  }
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << '\n';
  }
}

/// Rules x players matrix of normalized influence.
inline void write_exact_matrix(const std::array<ExactPowerReport, kRuleCount>& reports, OutputFormat format,
                               std::ostream& os) {
  const std::size_t n = reports[0].players.size();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"rule"};
  for (std::size_t i = 0; i < n; ++i) header.push_back("I_" + std::to_string(i + 1));
  if (format == OutputFormat::csv)
    for (std::size_t i = 0; i < n; ++i) header.push_back("exact_" + std::to_string(i + 1));
  rows.push_back(header);
  for (Rule r : kAllRules) {
    const auto& rep = reports[rule_index(r)];
    std::vector<std::string> row{std::string(rule_name(r))};
    for (const auto& p : rep.players) row.push_back(format_fixed(p.normalized_value(), 4));
    if (format == OutputFormat::csv)
      for (const auto& p : rep.players) row.push_back(p.normalized.str());
    rows.push_back(row);
  }
  if (format == OutputFormat::table) {
    os << "m = " << reports[0].m << ", weights = (";
    for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << reports[0].weights[i];
    os << ")\n";
    detail::print_table(os, rows);
    return;
  }
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << '\n';
  }
}

inline void write_mc_report(const McPowerReport& report, OutputFormat format, std::ostream& os) {
  os << "# rule=" << rule_name(report.rule) << " m=" << report.m << " samples=" << report.samples
     << " seed=" << report.seed << " confidence=" << format_fixed(report.confidence, 4)
     << " generator=" << report.generator << '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"player", "weight", "hit_count", "unnormalized_estimate", "normalized_estimate", "ci_half_width",
                  "exceeds_unit"});
  for (std::size_t i = 0; i < report.players.size(); ++i) {
    const auto& p = report.players[i];
    rows.push_back({std::to_string(i + 1), std::to_string(report.weights[i]), std::to_string(p.hit_count),
                    format_fixed(p.unnormalized, 6), format_fixed(p.normalized, 6), format_fixed(p.ci_half_width, 6),
                    p.exceeds_unit ? "true" : "false"});
  }
  if (format == OutputFormat::table) {
    detail::print_table(os, rows);
  } else {
    for (const auto& r : rows) {
      for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
      os << '\n';
    }
  }
}

}  // namespace wcpower

#endif  // WCPOWER_IO_HPP
