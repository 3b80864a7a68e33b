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

#ifndef WCPOWER_RULES_HPP
#define WCPOWER_RULES_HPP

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "wcpower/committee.hpp"
#include "wcpower/errors.hpp"
#include "wcpower/ranking.hpp"

namespace wcpower {

using Scores = std::array<std::int64_t, kMaxAlternatives>;
using Matrix = std::array<std::array<std::int64_t, kMaxAlternatives>, kMaxAlternatives>;

/// Anything that can enumerate (ranking, multiplicity) pairs. Rules never
/// see individual copies of a ballot, only its multiplicity.
template <class B>
concept BallotSource = requires(const B& b) {
  { b.m() } -> std::convertible_to<int>;
  { b.total_weight() } -> std::convertible_to<std::int64_t>;
  b.for_each([](const Ranking&, std::int64_t) {});
};

/// A committee's profile viewed as weighted ballots (r|w applied to P).
class WeightedProfile {
 public:
  WeightedProfile(const Committee& committee, std::span<const Ranking> profile)
      : committee_(&committee), profile_(profile) {}

  int m() const noexcept { return committee_->m(); }
  std::int64_t total_weight() const noexcept { return committee_->total_weight(); }

  template <class F>
  void for_each(F&& f) const {
    const auto w = committee_->weights();
    for (std::size_t i = 0; i < profile_.size(); ++i) f(profile_[i], w[i]);
  }

 private:
  const Committee* committee_;
  std::span<const Ranking> profile_;
};

struct WeightedBallot {
  Ranking ranking;
  std::int64_t multiplicity = 0;

  friend bool operator==(const WeightedBallot&, const WeightedBallot&) = default;
};

/// Anonymous ballot multiset: distinct rankings with their multiplicities,
/// ordered by ranking code.
class BallotMultiset {
 public:
  BallotMultiset(int m, std::vector<WeightedBallot> ballots) : m_(m), ballots_(std::move(ballots)) {
    for (const auto& b : ballots_) total_ += b.multiplicity;
  }

  int m() const noexcept { return m_; }
  std::int64_t total_weight() const noexcept { return total_; }
  std::span<const WeightedBallot> ballots() const noexcept { return ballots_; }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& b : ballots_) f(b.ranking, b.multiplicity);
  }

 private:
  int m_;
  std::vector<WeightedBallot> ballots_;
  std::int64_t total_ = 0;
};

/// Collapses a weighted profile into the multiset of w_i copies of each P_i,
/// stored as counts. Players with zero weight contribute nothing.
inline BallotMultiset expand_weighted(const Committee& committee, std::span<const Ranking> profile) {
  if (static_cast<int>(profile.size()) != committee.n()) throw validation_error("profile arity mismatch");
  std::vector<WeightedBallot> out;
  for (int i = 0; i < committee.n(); ++i) {
    const auto w = committee.weight(i);
    if (w == 0) continue;
    const auto& r = profile[static_cast<std::size_t>(i)];
    auto it = std::find_if(out.begin(), out.end(), [&](const WeightedBallot& b) { return b.ranking == r; });
    if (it == out.end())
      out.push_back({r, w});
    else
      it->multiplicity += w;
  }
  std::sort(out.begin(), out.end(),
            [](const WeightedBallot& a, const WeightedBallot& b) { return a.ranking.code() < b.ranking.code(); });
  return BallotMultiset(committee.m(), std::move(out));
}

/// First index attaining the maximum (lexicographic tie-breaking).
inline int argmax_lowest(const Scores& scores, int m) noexcept {
  int best = 0;
  for (int a = 1; a < m; ++a)
    if (scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(best)]) best = a;
  return best;
}

// ---------------------------------------------------------------------------
// Plurality

template <BallotSource B>
Scores plurality_scores(const B& ballots) {
  Scores s{};
  ballots.for_each([&](const Ranking& r, std::int64_t w) { s[static_cast<std::size_t>(r.top())] += w; });
  return s;
}

template <BallotSource B>
int plurality_winner(const B& ballots) {
  return argmax_lowest(plurality_scores(ballots), ballots.m());
}

// ---------------------------------------------------------------------------
// Plurality with runoff

/// Total weight ranking x above y.
template <BallotSource B>
std::int64_t pairwise_support(const B& ballots, int x, int y) {
  std::int64_t s = 0;
  ballots.for_each([&](const Ranking& r, std::int64_t w) {
    if (r.prefers(x, y)) s += w;
  });
  return s;
}

/// Stage one ends only on a strict majority of first places (> w(N)/2). The
/// runoff pair is the two highest plurality scorers, ties going to the lower
/// index, and the runoff itself also breaks ties towards the lower index.
template <BallotSource B>
int plurality_runoff_winner(const B& ballots) {
  const int m = ballots.m();
  const Scores s = plurality_scores(ballots);
  const int first = argmax_lowest(s, m);
  if (2 * s[static_cast<std::size_t>(first)] > ballots.total_weight()) return first;
  int second = -1;
  for (int a = 0; a < m; ++a) {
    if (a == first) continue;
    if (second < 0 || s[static_cast<std::size_t>(a)] > s[static_cast<std::size_t>(second)]) second = a;
  }
  const std::int64_t for_first = pairwise_support(ballots, first, second);
  const std::int64_t for_second = ballots.total_weight() - for_first;
  if (for_first != for_second) return for_first > for_second ? first : second;
  return std::min(first, second);
}

// ---------------------------------------------------------------------------
// Borda

/// b(a) = sum of w_i times the number of alternatives ranked below a.
template <BallotSource B>
Scores borda_scores(const B& ballots) {
  Scores s{};
  const int m = ballots.m();
  ballots.for_each([&](const Ranking& r, std::int64_t w) {
    for (int k = 0; k < m; ++k) s[static_cast<std::size_t>(r[k])] += w * (m - 1 - k);
  });
  return s;
}

template <BallotSource B>
int borda_winner(const B& ballots) {
  return argmax_lowest(borda_scores(ballots), ballots.m());
}

// ---------------------------------------------------------------------------
// Pairwise majority

/// d(x, y) = total weight of players ranking x above y; d(x, x) = 0.
class PairwiseTally {
 public:
  explicit PairwiseTally(int m) : m_(m) {}

  int m() const noexcept { return m_; }
  std::int64_t operator()(int x, int y) const noexcept {
    return d_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  std::int64_t& at(int x, int y) noexcept { return d_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }

  /// x beats y by strict weighted majority.
  bool beats(int x, int y) const noexcept { return (*this)(x, y) > (*this)(y, x); }

  std::int64_t margin(int x, int y) const noexcept { return (*this)(x, y) - (*this)(y, x); }

  /// Alternative beating every other one, or -1.
  int condorcet_winner() const noexcept {
    for (int x = 0; x < m_; ++x) {
      bool all = true;
      for (int y = 0; y < m_ && all; ++y)
        if (y != x && !beats(x, y)) all = false;
      if (all) return x;
    }
    return -1;
  }

 private:
  int m_;
  Matrix d_{};
};

template <BallotSource B>
PairwiseTally pairwise_tally(const B& ballots) {
  PairwiseTally t(ballots.m());
  const int m = ballots.m();
  ballots.for_each([&](const Ranking& r, std::int64_t w) {
    for (int hi = 0; hi < m; ++hi)
      for (int lo = hi + 1; lo < m; ++lo) t.at(r[hi], r[lo]) += w;
  });
  return t;
}

// ---------------------------------------------------------------------------
// Copeland

/// Number of alternatives each one beats by strict majority; exact ties
/// count for neither side.
inline Scores copeland_scores(const PairwiseTally& t) {
  Scores s{};
  for (int x = 0; x < t.m(); ++x)
    for (int y = 0; y < t.m(); ++y)
      if (x != y && t.beats(x, y)) ++s[static_cast<std::size_t>(x)];
  return s;
}

template <BallotSource B>
int copeland_winner(const B& ballots) {
  return argmax_lowest(copeland_scores(pairwise_tally(ballots)), ballots.m());
}

// ---------------------------------------------------------------------------
// Schulze (margins)

/// Strongest-path matrix: p(x, y) is the widest x -> y path where each link
/// carries its positive majority margin; 0 if no such path.
inline Matrix schulze_strengths(const PairwiseTally& t) {
  const int m = t.m();
  Matrix p{};
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y) p[x][y] = std::max<std::int64_t>(t.margin(x, y), 0);
  for (int k = 0; k < m; ++k)
    for (int x = 0; x < m; ++x) {
      if (x == k) continue;
      for (int y = 0; y < m; ++y) {
        if (y == k || y == x) continue;
        p[x][y] = std::max(p[x][y], std::min(p[x][k], p[k][y]));
      }
    }
  return p;
}

/// Lowest-index member of {x : p(x, y) >= p(y, x) for all y}.
inline int schulze_winner(const PairwiseTally& t) {
  const int m = t.m();
  const Matrix p = schulze_strengths(t);
  for (int x = 0; x < m; ++x) {
    bool wins = true;
    for (int y = 0; y < m && wins; ++y)
      if (y != x && p[x][y] < p[y][x]) wins = false;
    if (wins) return x;
  }
  // The beatpath relation is transitive, so the winner set is never empty.
  return 0;
}

template <BallotSource B>
int schulze_winner(const B& ballots) {
  return schulze_winner(pairwise_tally(ballots));
}

// ---------------------------------------------------------------------------
// Dispatch

template <BallotSource B>
int winner(Rule rule, const B& ballots) {
  switch (rule) {
    case Rule::plurality: return plurality_winner(ballots);
    case Rule::plurality_runoff: return plurality_runoff_winner(ballots);
    case Rule::borda: return borda_winner(ballots);
    case Rule::copeland: return copeland_winner(ballots);
    case Rule::schulze: return schulze_winner(ballots);
  }
  return 0;
}

inline int winner(const Committee& c, std::span<const Ranking> profile) {
  return winner(c.rule(), WeightedProfile(c, profile));
}

inline Scores plurality_scores(const Committee& c, std::span<const Ranking> p) {
  return plurality_scores(WeightedProfile(c, p));
}
inline int plurality_winner(const Committee& c, std::span<const Ranking> p) {
  return plurality_winner(WeightedProfile(c, p));
}
inline int plurality_runoff_winner(const Committee& c, std::span<const Ranking> p) {
  return plurality_runoff_winner(WeightedProfile(c, p));
}
inline Scores borda_scores(const Committee& c, std::span<const Ranking> p) {
  return borda_scores(WeightedProfile(c, p));
}
inline int borda_winner(const Committee& c, std::span<const Ranking> p) {
  return borda_winner(WeightedProfile(c, p));
}
inline PairwiseTally pairwise_tally(const Committee& c, std::span<const Ranking> p) {
  return pairwise_tally(WeightedProfile(c, p));
}
inline int copeland_winner(const Committee& c, std::span<const Ranking> p) {
  return copeland_winner(WeightedProfile(c, p));
}
inline int schulze_winner(const Committee& c, std::span<const Ranking> p) {
  return schulze_winner(WeightedProfile(c, p));
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// True iff both committees pick the same winner at every profile.
inline bool committees_equivalent(const Committee& a, const Committee& b,
                                  std::uint64_t cap = kDefaultEnumerationCap) {
  if (a.m() != b.m() || a.n() != b.n())
    throw validation_error("committees must share the number of alternatives and players");
  const ProfileCodec codec(a.m(), a.n(), cap);
  ProfileOdometer walk(codec);
  for (std::uint64_t code = 0; code < codec.size(); ++code, walk.advance())
    if (winner(a, walk.profile()) != winner(b, walk.profile())) return false;
  return true;
}

}  // namespace wcpower

#endif  // WCPOWER_RULES_HPP
