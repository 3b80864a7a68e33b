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

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

#include "wcpower/imf.hpp"
#include "wcpower/io.hpp"

using namespace wcpower;

namespace {

std::string what_of(const std::string& spec) {
  try {
    (void)parse_committee_spec(spec);
  } catch (const validation_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("committee spec parsing") {
  const auto c = parse_committee_spec(R"({"alternatives": ["x", "y", "z"], "weights": [6, 5, 3], "rule": "borda"})");
  CHECK(c.m() == 3);
  CHECK(c.n() == 3);
  CHECK(c.rule() == Rule::borda);
  CHECK(c.label(2) == "z");
  CHECK(c.total_weight() == 14);

  const auto d = parse_committee_spec(R"({"m": 4, "weights": [1, 2], "rule": "plurality-runoff"})");
  CHECK(d.m() == 4);
  CHECK(d.label(3) == "d");
  CHECK(d.rule() == Rule::plurality_runoff);

  const auto back = committee_from_json(committee_to_json(c));
  CHECK(back.m() == c.m());
  CHECK(back.labels().size() == 3);
  CHECK(std::vector<std::int64_t>(back.weights().begin(), back.weights().end()) ==
        std::vector<std::int64_t>{6, 5, 3});
  CHECK(committee_to_json(back) == committee_to_json(c));
}

TEST_CASE("committee spec errors") {
  CHECK(what_of(R"({"m": 3, "weights": [1], "rule": "approval"})").find("valid rules") != std::string::npos);
  CHECK(what_of(R"({"m": 3, "weights": [1], "rule": "approval"})").find("schulze") != std::string::npos);
  CHECK(what_of(R"({"m": 6, "weights": [1], "rule": "borda"})").find("2 to 5") != std::string::npos);
  CHECK(what_of(R"({"m": 1, "weights": [1], "rule": "borda"})").find("2 to 5") != std::string::npos);
  CHECK(what_of(R"({"m": 3, "weights": [1.5], "rule": "borda"})").find("integers") != std::string::npos);
  CHECK(what_of(R"({"m": 3, "weights": [-1, 2], "rule": "borda"})") != "");
  CHECK(what_of(R"({"m": 3, "weights": [0, 0], "rule": "borda"})") != "");
  CHECK(what_of(R"({"m": 3, "weights": [1], "rule": "borda", "extra": 1})").find("extra") != std::string::npos);
  CHECK(what_of(R"({"alternatives": ["a", "a"], "weights": [1], "rule": "borda"})") != "");
  CHECK(what_of(R"({"alternatives": ["a", "b"], "m": 3, "weights": [1], "rule": "borda"})") != "");
  CHECK(what_of(R"({"weights": [1], "rule": "borda"})") != "");
  CHECK(what_of(R"({"m": 3, "rule": "borda"})") != "");
  CHECK(what_of(R"({"m": 3, "weights": [1]})") != "");
  CHECK(what_of("[1, 2]") != "");
  CHECK(what_of("{not json") != "");
  CHECK_THROWS_AS(load_committee("/nonexistent/committee.json"), io_error);
}

TEST_CASE("exact report output is stable") {
  ExactPowerReport r;
  r.rule = Rule::borda;
  r.m = 3;
  r.weights = {6, 5, 3};
  r.players = {{588, Rational(49, 90), Rational(49, 72)},
               {516, Rational(0), Rational(43, 72)},
               {312, Rational(0), Rational(13, 36)}};
  std::ostringstream a, b;
  write_exact_report(r, OutputFormat::csv, a);
  write_exact_report(r, OutputFormat::csv, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("player,weight,swing_count,unnormalized_exact,normalized_exact,normalized_float\n"
                      "1,6,588,49/90,49/72,0.6806\n",
                      0) == 0);
  std::ostringstream t;
  write_exact_report(r, OutputFormat::table, t);
  CHECK(t.str().find("rule: borda, m = 3") != std::string::npos);
  CHECK(parse_output_format("table") == OutputFormat::table);
  CHECK_THROWS_AS(parse_output_format("xml"), validation_error);
}

TEST_CASE("MC report header") {
  McPowerReport r;
  r.rule = Rule::copeland;
  r.m = 3;
  r.weights = {2, 1};
  r.samples = 100;
  r.seed = 7;
  r.players = {{50, 0.5, 0.625, 0.1, false}, {0, 0.0, 0.0, 0.0, false}};
  std::ostringstream os;
  write_mc_report(r, OutputFormat::csv, os);
  CHECK(os.str() ==
        "# rule=copeland m=3 samples=100 seed=7 confidence=0.9500 generator=philox4x32-10\n"
        "player,weight,hit_count,unnormalized_estimate,normalized_estimate,ci_half_width,exceeds_unit\n"
        "1,2,50,0.500000,0.625000,0.100000,false\n"
        "2,1,0,0.000000,0.000000,0.000000,false\n");
}

TEST_CASE("board data") {
  const auto& board = imf_board();
  REQUIRE(board.size() == 24);
  CHECK(board.front().label == "USA");
  CHECK(board.front().pre_bp == 1672);
  CHECK(board.front().post_bp == 1647);
  CHECK(board[2].label == "China");
  CHECK(board[2].post_bp == 607);
  CHECK(board[21].label == "Saudi Arabia");
  CHECK(board[21].pre_bp == 280);
  CHECK(board[21].post_bp == 201);
  CHECK(imf_weights(Era::post).size() == 24);
  CHECK(imf_committee(Rule::copeland, Era::pre).total_weight() ==
        std::accumulate(board.begin(), board.end(), std::int64_t{0},
                        [](std::int64_t s, const ImfMember& m) { return s + m.pre_bp; }));
  CHECK(parse_era("post") == Era::post);
  CHECK_THROWS_AS(parse_era("later"), validation_error);
  CHECK(imf_era_seed(10, Era::pre) == 10);
  CHECK(imf_era_seed(10, Era::post) == 11);
  CHECK(imf_reference_rule(Rule::copeland));
  CHECK_FALSE(imf_reference_rule(Rule::borda));
}

TEST_CASE("percentages convert exactly") {
  CHECK(bp_to_percent(1672) == "16.72");
  CHECK(bp_to_percent(607) == "6.07");
  CHECK(bp_to_percent(5) == "0.05");
  CHECK(percent_to_bp("16.72") == 1672);
  CHECK(percent_to_bp("6.1") == 610);
  CHECK(percent_to_bp("3") == 300);
  CHECK_THROWS_AS(percent_to_bp("1.234"), validation_error);
  CHECK_THROWS_AS(percent_to_bp("x.1"), validation_error);
  CHECK_THROWS_AS(percent_to_bp(".5"), validation_error);
}

TEST_CASE("board CSV round trip") {
  std::ostringstream os;
  export_imf_csv(imf_board(), os);
  CHECK(os.str().rfind("member,share_pre,share_post\nUSA,16.72,16.47\n", 0) == 0);
  std::istringstream is(os.str());
  const auto back = import_imf_csv(is);
  REQUIRE(back.size() == 24);
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].label == imf_board()[i].label);
    CHECK(back[i].pre_bp == imf_board()[i].pre_bp);
    CHECK(back[i].post_bp == imf_board()[i].post_bp);
  }
  std::istringstream bad("name,pre,post\n");
  CHECK_THROWS_AS(import_imf_csv(bad), validation_error);
}

TEST_CASE("board report layout") {
  const McConfig config{.samples = 2000, .seed = 3, .workers = 1};
  const auto runs = run_imf({Rule::plurality}, {Era::pre, Era::post}, config);
  REQUIRE(runs.size() == 2);
  CHECK(runs[1].report.seed == 4);
  std::ostringstream a, b;
  write_imf_csv(runs, true, config, OutputFormat::csv, a);
  write_imf_csv(run_imf({Rule::plurality}, {Era::pre, Era::post}, {.samples = 2000, .seed = 3, .workers = 3}), true,
                config, OutputFormat::csv, b);
  CHECK(a.str() == b.str());
  std::istringstream lines(a.str());
  std::string first, header;
  std::getline(lines, first);
  std::getline(lines, header);
  CHECK(first.rfind("# imf samples=2000 seed=3", 0) == 0);
  CHECK(header ==
        "member,share_pre,share_post,plurality_pre,plurality_pre_ci,plurality_post,plurality_post_ci,plurality_z,"
        "plurality_significant");
}
