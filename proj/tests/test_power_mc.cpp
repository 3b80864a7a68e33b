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

#include <array>
#include <cmath>

#include "wcpower/power_exact.hpp"
#include "wcpower/power_mc.hpp"

using namespace wcpower;

TEST_CASE("Philox4x32-10 known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::generate(B{0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate(B{~0U, ~0U, ~0U, ~0U}, {~0U, ~0U}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate(B{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("Philox streams") {
  Philox4x32 a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  bool differs_stream = false, differs_seed = false;
  for (int i = 0; i < 16; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs_stream |= x != c();
    differs_seed |= x != d();
  }
  CHECK(differs_stream);
  CHECK(differs_seed);
  // First block of stream 0 under seed 0 is the all-zero known answer.
  Philox4x32 zero(0, 0);
  CHECK(zero() == 0x6627e8d5);
}

TEST_CASE("uniform_below is in range and roughly flat") {
  Philox4x32 rng(7, 3);
  std::array<int, 6> counts{};
  for (int i = 0; i < 60000; ++i) {
    const auto x = rng.uniform_below(6);
    REQUIRE(x < 6);
    ++counts[x];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  for (int i = 0; i < 100; ++i) CHECK(rng.uniform_below(1) == 0);
}

TEST_CASE("normal quantile") {
  CHECK(z_value(0.95) == Catch::Approx(1.959964).epsilon(1e-6));
  CHECK(z_value(0.99) == Catch::Approx(2.575829).epsilon(1e-6));
}

TEST_CASE("configuration errors") {
  const Committee c(3, {6, 5, 3}, Rule::borda);
  CHECK_THROWS_AS(influence_mc(c, {.samples = 0}), validation_error);
  CHECK_THROWS_AS(influence_mc(c, {.samples = 10, .confidence = 1.0}), validation_error);
  CHECK_THROWS_AS(influence_mc(c, {.samples = 10, .confidence = 0.0}), validation_error);
}

TEST_CASE("estimates do not depend on the worker count") {
  const Committee c(3, {6, 5, 3, 2, 1}, Rule::schulze);
  const auto one = influence_mc(c, {.samples = 50'000, .seed = 5, .workers = 1});
  for (unsigned w : {2U, 4U, 8U}) {
    const auto many = influence_mc(c, {.samples = 50'000, .seed = 5, .workers = w});
    for (std::size_t i = 0; i < one.players.size(); ++i) REQUIRE(many.players[i].hit_count == one.players[i].hit_count);
  }
  const auto other_seed = influence_mc(c, {.samples = 50'000, .seed = 6, .workers = 1});
  bool differs = false;
  for (std::size_t i = 0; i < one.players.size(); ++i) differs |= other_seed.players[i].hit_count != one.players[i].hit_count;
  CHECK(differs);
}

TEST_CASE("dictator and null players") {
  const auto rep = influence_mc(Committee(3, {4, 1, 1}, Rule::plurality), {.samples = 20'000, .seed = 1});
  CHECK(rep.players[0].unnormalized == Catch::Approx(0.8).margin(0.01));
  CHECK(rep.players[0].normalized == Catch::Approx(1.0).margin(0.0125));
  CHECK(rep.players[1].hit_count == 0);
  CHECK(rep.players[2].hit_count == 0);
  CHECK(rep.players[1].ci_half_width == 0.0);
}

TEST_CASE("report metadata") {
  const auto rep = influence_mc(Committee(4, {2, 1}, Rule::copeland), {.samples = 1000, .seed = 9, .confidence = 0.9});
  CHECK(rep.rule == Rule::copeland);
  CHECK(rep.m == 4);
  CHECK(rep.weights == std::vector<std::int64_t>{2, 1});
  CHECK(rep.samples == 1000);
  CHECK(rep.seed == 9);
  CHECK(rep.generator == "philox4x32-10");
  CHECK(rep.z == Catch::Approx(1.644854).epsilon(1e-6));
}

TEST_CASE("Monte Carlo agrees with the exact index") {
  const Committee c(3, {6, 5, 3}, Rule::borda);
  const auto truth = influence_exact(c);
  const auto est = influence_mc(c, {.samples = 100'000, .seed = 2026});
  for (int i = 0; i < 3; ++i) {
    const auto& e = est.players[i];
    CHECK(std::abs(e.normalized - truth.players[i].normalized_value()) < 3 * e.ci_half_width);
    CHECK_FALSE(e.exceeds_unit);
  }
}

TEST_CASE("confidence intervals cover at roughly the nominal rate") {
  const Committee c(3, {6, 5, 3}, Rule::borda);
  const auto truth = influence_exact(c);
  constexpr int kSeeds = 100;
  int covered[3] = {0, 0, 0};
  double mean[3] = {0, 0, 0};
  for (int s = 0; s < kSeeds; ++s) {
    const auto est = influence_mc(c, {.samples = 20'000, .seed = 1000 + static_cast<std::uint64_t>(s)});
    for (int i = 0; i < 3; ++i) {
      const double t = truth.players[i].normalized_value();
      covered[i] += std::abs(est.players[i].normalized - t) <= est.players[i].ci_half_width;
      mean[i] += est.players[i].normalized / kSeeds;
    }
  }
  for (int i = 0; i < 3; ++i) {
    INFO("player " << i + 1 << " covered " << covered[i]);
    CHECK(covered[i] >= 85);
    // The mean of 100 runs has a tenth of the single-run spread.
    CHECK(std::abs(mean[i] - truth.players[i].normalized_value()) < 0.01);
  }
}

TEST_CASE("two-proportion significance") {
  const Committee c(3, {6, 5, 3}, Rule::plurality);
  const auto a = influence_mc(c, {.samples = 20'000, .seed = 1});
  const auto same = difference_significant(a, a, 0);
  CHECK(same.z == 0.0);
  CHECK_FALSE(same.significant);

  const auto b = influence_mc(Committee(3, {12, 1, 1}, Rule::plurality), {.samples = 20'000, .seed = 2});
  const auto diff = difference_significant(a, b, 1);
  CHECK(diff.significant);
  CHECK(diff.z > 0.0);

  const auto m4 = influence_mc(Committee(4, {6, 5, 3}, Rule::plurality), {.samples = 100, .seed = 1});
  CHECK_THROWS_AS(difference_significant(a, m4, 0), validation_error);
  CHECK_THROWS_AS(difference_significant(a, b, 3), validation_error);
}
