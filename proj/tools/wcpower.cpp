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

// wcpower: voting power in weighted committees from the command line.
//
//   wcpower eval COMMITTEE RANKING...
//   wcpower power exact COMMITTEE [--all-rules] [--m M]
//   wcpower power mc COMMITTEE --samples N --seed S
//   wcpower imf [--rule R]... [--era pre|post|both] [--diff]
//   wcpower map (--rule-a A --rule-b B | --best) [--player I] [--resolution D]

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wcpower/wcpower.hpp"

namespace {

using namespace wcpower;

constexpr int kExitValidation = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitIo = 1;

struct OutputOptions {
  std::string format = "csv";
  std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "csv or table")->check(CLI::IsMember({"csv", "table"}));
  cmd->add_option("--out", o.out, "write the result here instead of standard output");
}

void emit(const OutputOptions& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
}

std::string join_weights(std::span<const std::int64_t> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

std::string scores_line(const Committee& c, const Scores& s) {
  std::string line;
  for (int a = 0; a < c.m(); ++a) line += (a ? " " : "") + c.label(a) + "=" + std::to_string(s[a]);
  return line;
}

std::string matrix_block(const Committee& c, const std::string& title, auto&& cell) {
  std::ostringstream os;
  os << title << ":\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (int y = 0; y < c.m(); ++y) header.push_back(c.label(y));
  rows.push_back(header);
  for (int x = 0; x < c.m(); ++x) {
    std::vector<std::string> row{c.label(x)};
    for (int y = 0; y < c.m(); ++y) row.push_back(x == y ? "-" : std::to_string(cell(x, y)));
    rows.push_back(row);
  }
  detail::print_table(os, rows);
  return os.str();
}

std::string describe_tally(const Committee& c, std::span<const Ranking> profile) {
  const WeightedProfile ballots(c, profile);
  std::ostringstream os;
  switch (c.rule()) {
    case Rule::plurality:
      os << "plurality scores: " << scores_line(c, plurality_scores(ballots)) << '\n';
      break;
    case Rule::plurality_runoff: {
      const auto s = plurality_scores(ballots);
      os << "plurality scores: " << scores_line(c, s) << '\n';
      const int first = argmax_lowest(s, c.m());
      if (2 * s[first] > c.total_weight()) {
        os << "majority in the first round: " << c.label(first) << '\n';
      } else {
        int second = -1;
        for (int a = 0; a < c.m(); ++a)
          if (a != first && (second < 0 || s[a] > s[second])) second = a;
        const auto support = pairwise_support(ballots, first, second);
        os << "runoff: " << c.label(first) << "=" << support << " " << c.label(second) << "="
           << c.total_weight() - support << '\n';
      }
      break;
    }
    case Rule::borda:
      os << "borda scores: " << scores_line(c, borda_scores(ballots)) << '\n';
      break;
    case Rule::copeland: {
      const auto t = pairwise_tally(ballots);
      os << matrix_block(c, "pairwise tally", [&](int x, int y) { return t(x, y); });
      os << "copeland scores: " << scores_line(c, copeland_scores(t)) << '\n';
      break;
    }
    case Rule::schulze: {
      const auto t = pairwise_tally(ballots);
      os << matrix_block(c, "pairwise tally", [&](int x, int y) { return t(x, y); });
      const auto p = schulze_strengths(t);
      os << matrix_block(c, "strongest paths", [&](int x, int y) { return p[x][y]; });
      break;
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voting power in weighted committees"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "winner of one profile");
  std::string eval_file;
  std::vector<std::string> eval_rankings;
  bool verbose = false;
  eval->add_option("committee", eval_file, "committee spec (JSON)")->required();
  eval->add_option("rankings", eval_rankings, "one ranking per player, e.g. bca abc cba")->required();
  eval->add_flag("--verbose,-v", verbose, "print the rule's tally");

  // power exact / power mc
  auto* power = app.add_subcommand("power", "influence of every player");
  power->require_subcommand(1);
  auto* exact = power->add_subcommand("exact", "exact influence by full enumeration");
  std::string exact_file;
  bool all_rules = false;
  std::optional<int> exact_m;
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned exact_workers = 0;
  OutputOptions exact_out;
  exact->add_option("committee", exact_file, "committee spec (JSON)")->required();
  exact->add_flag("--all-rules", all_rules, "rules x players matrix for the committee's weights");
  exact->add_option("--m", exact_m, "override the number of alternatives (default labels)");
  exact->add_option("--cap", cap, "maximum number of profiles to enumerate");
  exact->add_option("--workers", exact_workers, "worker threads (0 = all cores)");
  add_output_options(exact, exact_out);

  auto* mc = power->add_subcommand("mc", "Monte Carlo estimate of influence");
  std::string mc_file;
  McConfig mc_config;
  OutputOptions mc_out;
  mc->add_option("committee", mc_file, "committee spec (JSON)")->required();
  mc->add_option("--samples", mc_config.samples, "sampled profiles")->capture_default_str();
  mc->add_option("--seed", mc_config.seed, "generator seed")->capture_default_str();
  mc->add_option("--confidence", mc_config.confidence, "confidence level")->capture_default_str();
  mc->add_option("--workers", mc_config.workers, "worker threads (0 = all cores)");
  add_output_options(mc, mc_out);

  // imf
  auto* imf = app.add_subcommand("imf", "IMF Executive Board influence table");
  std::vector<std::string> imf_rules{"plurality", "plurality-runoff", "copeland"};
  std::string imf_era = "both";
  bool imf_diff = false;
  McConfig imf_config;
  OutputOptions imf_out;
  imf->add_option("--rule", imf_rules, "rule(s) to evaluate")->capture_default_str();
  imf->add_option("--era", imf_era, "pre, post or both")
      ->check(CLI::IsMember({"pre", "post", "both"}))
      ->capture_default_str();
  imf->add_flag("--diff", imf_diff, "test pre vs. post differences per chair (runs both eras)");
  imf->add_option("--samples", imf_config.samples, "sampled profiles per run")->capture_default_str();
  imf->add_option("--seed", imf_config.seed, "generator seed")->capture_default_str();
  imf->add_option("--confidence", imf_config.confidence, "confidence level")->capture_default_str();
  imf->add_option("--workers", imf_config.workers, "worker threads (0 = all cores)");
  imf->add_flag("--export-shares", "print the embedded vote shares and exit");
  add_output_options(imf, imf_out);

  // map
  auto* map = app.add_subcommand("map", "ternary influence maps for three players");
  std::string rule_a, rule_b;
  bool best = false;
  int player = 1;
  int resolution = 60;
  int map_m = 3;
  std::string prefix = "map";
  std::string cache_path;
  unsigned map_workers = 0;
  map->add_option("--rule-a", rule_a, "first rule of a pairwise comparison");
  map->add_option("--rule-b", rule_b, "second rule of a pairwise comparison");
  map->add_flag("--best", best, "map of influence-maximizing rule sets");
  map->add_option("--player", player, "player (1, 2 or 3)")->capture_default_str();
  map->add_option("--resolution", resolution, "grid resolution D")->capture_default_str();
  map->add_option("--m", map_m, "number of alternatives")->capture_default_str();
  map->add_option("--out", prefix, "output prefix; writes PREFIX.svg and PREFIX.csv")->capture_default_str();
  map->add_option("--cache", cache_path, "influence cache file, read if present and updated");
  map->add_option("--workers", map_workers, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*eval) {
      const Committee c = load_committee(eval_file);
      const Profile profile = Profile::parse(eval_rankings, c.labels());
      if (static_cast<int>(profile.size()) != c.n())
        throw validation_error("committee has " + std::to_string(c.n()) + " players but " +
                               std::to_string(profile.size()) + " rankings were given");
      std::cout << c.label(winner(c, profile)) << '\n';
      if (verbose) std::cout << describe_tally(c, profile);
    } else if (*exact) {
      Committee c = load_committee(exact_file);
      if (exact_m) c = c.with_alternatives(*exact_m);
      const ExactOptions options{cap, exact_workers};
      const auto format = parse_output_format(exact_out.format);
      std::ostringstream os;
      if (format == OutputFormat::csv)
        os << "# power exact m=" << c.m() << " weights=" << join_weights(c.weights())
           << (all_rules ? std::string(" rules=all") : " rule=" + std::string(rule_name(c.rule()))) << '\n';
      if (all_rules)
        write_exact_matrix(influence_exact_all_rules(c, options), format, os);
      else
        write_exact_report(influence_exact(c, options), format, os);
      emit(exact_out, os.str());
    } else if (*mc) {
      const Committee c = load_committee(mc_file);
      std::ostringstream os;
      write_mc_report(influence_mc(c, mc_config), parse_output_format(mc_out.format), os);
      emit(mc_out, os.str());
    } else if (*imf) {
      if (imf->count("--export-shares")) {
        std::ostringstream os;
        export_imf_csv(imf_board(), os);
        emit(imf_out, os.str());
        return 0;
      }
      std::vector<Rule> rules;
      for (const auto& r : imf_rules) {
        rules.push_back(parse_rule(r));
        if (!imf_reference_rule(rules.back()))
          std::cerr << "note: " << r << " has no reference IMF figures (reference rules: plurality, plurality-runoff, copeland)\n";
      }
      std::vector<Era> eras;
      if (imf_diff || imf_era == "both")
        eras = {Era::pre, Era::post};
      else
        eras = {parse_era(imf_era)};
      const auto runs = run_imf(rules, eras, imf_config);
      std::ostringstream os;
      write_imf_csv(runs, imf_diff, imf_config, parse_output_format(imf_out.format), os);
      emit(imf_out, os.str());
    } else if (*map) {
      if (best == (!rule_a.empty() || !rule_b.empty()))
        throw validation_error("give either --best or both --rule-a and --rule-b");
      if (!best && (rule_a.empty() || rule_b.empty()))
        throw validation_error("a pairwise map needs both --rule-a and --rule-b");
      if (player < 1 || player > 3) throw validation_error("--player must be 1, 2 or 3");
      InfluenceCache cache(map_m);
      if (!cache_path.empty() && std::ifstream(cache_path).good()) cache = InfluenceCache::load(cache_path);
      const SimplexGrid grid = scan_simplex(resolution, map_m, {map_workers, &cache});
      if (!cache_path.empty()) cache.save(cache_path);
      std::ostringstream csv;
      std::string svg;
      if (best) {
        const auto m = best_rule_map(grid, player - 1);
        write_best_rule_csv(m, grid, csv);
        svg = ternary_svg(m);
      } else {
        const auto cls = classify_pairwise(grid, parse_rule(rule_a), parse_rule(rule_b), player - 1);
        write_classification_csv(cls, csv);
        svg = ternary_svg(cls);
      }
      write_text_file(prefix + ".svg", svg);
      write_text_file(prefix + ".csv", csv.str());
      std::cout << prefix << ".svg\n" << prefix << ".csv\n";
    }
  } catch (const enumeration_too_large& e) {
    std::cerr << "error: " << e.what() << "\nhint: try 'wcpower power mc'\n";
    return kExitResourceCap;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
