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

// Brute-force reference implementations used only by the tests. They follow
// the textbook definitions literally (materialized ballot copies, explicit
// path enumeration, naive double loops) and share no code with the library
// beyond the Ranking type.

#ifndef WCPOWER_TESTS_ORACLE_HPP
#define WCPOWER_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "wcpower/committee.hpp"
#include "wcpower/ranking.hpp"

namespace oracle {

using wcpower::Ranking;

enum class Rule { plurality, plurality_runoff, borda, copeland, schulze };

inline Rule from(wcpower::Rule r) { return static_cast<Rule>(static_cast<int>(r)); }

/// w_i copies of P_i.
inline std::vector<Ranking> expand(const std::vector<std::int64_t>& w, const std::vector<Ranking>& p) {
  std::vector<Ranking> ballots;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::int64_t k = 0; k < w[i]; ++k) ballots.push_back(p[i]);
  return ballots;
}

inline int first_max(const std::vector<long>& s) {
  return static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
}

inline std::vector<long> tops(const std::vector<Ranking>& ballots, int m) {
  std::vector<long> s(static_cast<std::size_t>(m), 0);
  for (const auto& b : ballots) ++s[static_cast<std::size_t>(b[0])];
  return s;
}

inline long prefer_count(const std::vector<Ranking>& ballots, int x, int y) {
  long c = 0;
  for (const auto& b : ballots) {
    for (int k = 0; k < b.size(); ++k) {
      if (b[k] == x) {
        ++c;
        break;
      }
      if (b[k] == y) break;
    }
  }
  return c;
}

inline int plurality(const std::vector<Ranking>& ballots, int m) { return first_max(tops(ballots, m)); }

inline int plurality_runoff(const std::vector<Ranking>& ballots, int m) {
  const auto s = tops(ballots, m);
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s[a] > s[b]; });
  const int a1 = order[0];
  const int a2 = order[1];
  if (2 * s[a1] > static_cast<long>(ballots.size())) return a1;
  const long v1 = prefer_count(ballots, a1, a2);
  const long v2 = prefer_count(ballots, a2, a1);
  if (v1 > v2) return a1;
  if (v2 > v1) return a2;
  return std::min(a1, a2);
}

inline std::vector<long> borda_points(const std::vector<Ranking>& ballots, int m) {
  std::vector<long> s(static_cast<std::size_t>(m), 0);
  for (const auto& b : ballots)
    for (int a = 0; a < m; ++a)
      for (int a2 = 0; a2 < m; ++a2)
        if (a != a2 && b.position(a) < b.position(a2)) ++s[static_cast<std::size_t>(a)];
  return s;
}

inline int borda(const std::vector<Ranking>& ballots, int m) { return first_max(borda_points(ballots, m)); }

inline int copeland(const std::vector<Ranking>& ballots, int m) {
  std::vector<long> s(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && prefer_count(ballots, a, b) > prefer_count(ballots, b, a)) ++s[static_cast<std::size_t>(a)];
  return first_max(s);
}

/// Strongest path by enumerating every simple path.
inline int schulze(const std::vector<Ranking>& ballots, int m) {
  std::vector<std::vector<long>> link(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) link[a][b] = std::max(0L, prefer_count(ballots, a, b) - prefer_count(ballots, b, a));
  auto strongest = [&](int from, int to) {
    long best = 0;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    std::function<void(int, long)> dfs = [&](int at, long width) {
      if (at == to) {
        best = std::max(best, width);
        return;
      }
      for (int nxt = 0; nxt < m; ++nxt) {
        if (used[nxt] || link[at][nxt] <= 0) continue;
        used[nxt] = true;
        dfs(nxt, std::min(width, link[at][nxt]));
        used[nxt] = false;
      }
    };
    used[from] = true;
    dfs(from, std::numeric_limits<long>::max());
    return best;
  };
  for (int x = 0; x < m; ++x) {
    bool ok = true;
    for (int y = 0; y < m && ok; ++y)
      if (x != y && strongest(x, y) < strongest(y, x)) ok = false;
    if (ok) return x;
  }
  return -1;
}

inline int winner(Rule r, const std::vector<std::int64_t>& w, const std::vector<Ranking>& p, int m) {
  const auto ballots = expand(w, p);
  switch (r) {
    case Rule::plurality: return plurality(ballots, m);
    case Rule::plurality_runoff: return plurality_runoff(ballots, m);
    case Rule::borda: return borda(ballots, m);
    case Rule::copeland: return copeland(ballots, m);
    case Rule::schulze: return schulze(ballots, m);
  }
  return -1;
}

/// Sum over all profiles P and all P'_i != P_i of [winner changes], by
/// direct re-evaluation. Winners are cached per profile index.
inline std::vector<std::int64_t> naive_swings(Rule r, const std::vector<std::int64_t>& w, int m) {
  const int n = static_cast<int>(w.size());
  const auto f = static_cast<std::uint32_t>(wcpower::factorial(m));
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= f;
  auto decode = [&](std::uint64_t code) {
    std::vector<Ranking> p;
    for (int i = 0; i < n; ++i) {
      p.push_back(Ranking::from_code(static_cast<std::uint32_t>(code % f), m));
      code /= f;
    }
    return p;
  };
  std::vector<std::int64_t> swings(static_cast<std::size_t>(n), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto p = decode(code);
    const int base = winner(r, w, p, m);
    for (int i = 0; i < n; ++i) {
      const Ranking keep = p[i];
      for (std::uint32_t c = 0; c < f; ++c) {
        const Ranking alt = Ranking::from_code(c, m);
        if (alt == keep) continue;
        p[i] = alt;
        if (winner(r, w, p, m) != base) ++swings[i];
      }
      p[i] = keep;
    }
  }
  return swings;
}

/// Penrose-Banzhaf via marginal contributions v(S u {i}) - v(S) of the
/// simple game v(S) = [2 w(S) >= w(N)]; returns counts over 2^(n-1).
inline std::vector<std::int64_t> pbi_critical_counts(const std::vector<std::int64_t>& w) {
  const int n = static_cast<int>(w.size());
  const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
  auto v = [&](std::uint64_t mask) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1U) s += w[j];
    return 2 * s >= total ? 1 : 0;
  };
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    for (int i = 0; i < n; ++i)
      if (!(mask >> i & 1U)) out[i] += v(mask | (std::uint64_t{1} << i)) - v(mask);
  return out;
}

}  // namespace oracle

#endif  // WCPOWER_TESTS_ORACLE_HPP
