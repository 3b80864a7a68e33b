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

#ifndef WCPOWER_RANKING_HPP
#define WCPOWER_RANKING_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcpower/errors.hpp"

namespace wcpower {

/// Rankings are stored inline; 8! = 40320 keeps codes in 32 bits.
inline constexpr int kMaxAlternatives = 8;

constexpr std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline void check_alternative_count(int m) {
  if (m < 2 || m > kMaxAlternatives)
    throw validation_error("number of alternatives must lie in [2, " +
                           std::to_string(kMaxAlternatives) + "], got " + std::to_string(m));
}

/// "a", "b", "c", ...
inline std::vector<std::string> default_labels(int m) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) labels.emplace_back(1, static_cast<char>('a' + k));
  return labels;
}

/// Strict preference ordering over m alternatives, most preferred first.
///
/// The integer code is the Lehmer rank of the permutation, so codes follow
/// lexicographic order: for m = 3, abc = 0, acb = 1, bac = 2, bca = 3,
/// cab = 4, cba = 5.
class Ranking {
 public:
  Ranking() = default;

  explicit Ranking(std::span<const int> order) {
    const int m = static_cast<int>(order.size());
    check_alternative_count(m);
    m_ = static_cast<std::uint8_t>(m);
    std::array<bool, kMaxAlternatives> seen{};
    for (int k = 0; k < m; ++k) {
      const int a = order[static_cast<std::size_t>(k)];
      if (a < 0 || a >= m) throw validation_error("alternative index out of range: " + std::to_string(a));
      if (seen[static_cast<std::size_t>(a)])
        throw validation_error("alternative listed twice: " + std::to_string(a));
      seen[static_cast<std::size_t>(a)] = true;
      order_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(a);
      pos_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(k);
    }
  }

  Ranking(std::initializer_list<int> order)
      : Ranking(std::span<const int>(order.begin(), order.size())) {}

  static Ranking identity(int m) { return from_code(0, m); }

  static Ranking from_code(std::uint32_t code, int m) {
    check_alternative_count(m);
    if (code >= factorial(m))
      throw validation_error("ranking code " + std::to_string(code) + " out of range for m = " +
                             std::to_string(m));
    Ranking r;
    r.m_ = static_cast<std::uint8_t>(m);
    std::array<std::uint8_t, kMaxAlternatives> remaining{};
    for (int k = 0; k < m; ++k) remaining[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
    int left = m;
    for (int k = 0; k < m; ++k) {
      const auto f = static_cast<std::uint32_t>(factorial(m - 1 - k));
      const auto digit = static_cast<int>(code / f);
      code %= f;
      const std::uint8_t a = remaining[static_cast<std::size_t>(digit)];
      std::copy(remaining.begin() + digit + 1, remaining.begin() + left, remaining.begin() + digit);
      --left;
      r.order_[static_cast<std::size_t>(k)] = a;
      r.pos_[a] = static_cast<std::uint8_t>(k);
    }
    return r;
  }

  /// Parses "bca" (one character per label) or "x>y>z" (separated labels).
  static Ranking from_string(std::string_view text, std::span<const std::string> labels) {
    const int m = static_cast<int>(labels.size());
    check_alternative_count(m);
    std::vector<std::string_view> tokens;
    if (text.find('>') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        const auto sep = text.find('>', start);
        tokens.push_back(text.substr(start, sep - start));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
      }
    } else {
      for (std::size_t k = 0; k < text.size(); ++k) tokens.push_back(text.substr(k, 1));
    }
    if (static_cast<int>(tokens.size()) != m)
      throw validation_error("ranking '" + std::string(text) + "' must list " + std::to_string(m) +
                             " alternatives");
    std::array<int, kMaxAlternatives> order{};
    std::array<bool, kMaxAlternatives> seen{};
    for (int k = 0; k < m; ++k) {
      const auto tok = tokens[static_cast<std::size_t>(k)];
      const auto it = std::find(labels.begin(), labels.end(), tok);
      if (it == labels.end())
        throw validation_error("unknown label '" + std::string(tok) + "' in ranking '" +
                               std::string(text) + "'");
      const auto a = static_cast<std::size_t>(it - labels.begin());
      if (seen[a])
        throw validation_error("duplicate label '" + std::string(tok) + "' in ranking '" +
                               std::string(text) + "'");
      seen[a] = true;
      order[static_cast<std::size_t>(k)] = static_cast<int>(a);
    }
    return Ranking(std::span<const int>(order.data(), static_cast<std::size_t>(m)));
  }

  static Ranking from_string(std::string_view text, int m) {
    const auto labels = default_labels(m);
    return from_string(text, labels);
  }

  std::uint32_t code() const noexcept {
    std::uint32_t code = 0;
    for (int k = 0; k < m_; ++k) {
      int smaller_after = 0;
      for (int j = k + 1; j < m_; ++j)
        smaller_after += order_[static_cast<std::size_t>(j)] < order_[static_cast<std::size_t>(k)];
      code += static_cast<std::uint32_t>(smaller_after) * static_cast<std::uint32_t>(factorial(m_ - 1 - k));
    }
    return code;
  }

  int size() const noexcept { return m_; }
  /// Alternative placed at rank k (0 = top).
  int operator[](int k) const noexcept { return order_[static_cast<std::size_t>(k)]; }
  int top() const noexcept { return order_[0]; }
  int position(int alternative) const noexcept { return pos_[static_cast<std::size_t>(alternative)]; }
  bool prefers(int x, int y) const noexcept { return position(x) < position(y); }

  std::string to_string(std::span<const std::string> labels) const {
    const bool compact = std::all_of(labels.begin(), labels.end(), [](const auto& l) { return l.size() == 1; });
    std::string s;
    for (int k = 0; k < m_; ++k) {
      if (!compact && k > 0) s += '>';
      s += labels[order_[static_cast<std::size_t>(k)]];
    }
    return s;
  }

  std::string to_string() const { return to_string(default_labels(m_)); }

  friend bool operator==(const Ranking& a, const Ranking& b) noexcept {
    return a.m_ == b.m_ && std::equal(a.order_.begin(), a.order_.begin() + a.m_, b.order_.begin());
  }

 private:
  std::array<std::uint8_t, kMaxAlternatives> order_{};
  std::array<std::uint8_t, kMaxAlternatives> pos_{};
  std::uint8_t m_ = 0;
};

/// All m! rankings indexed by code.
inline std::vector<Ranking> all_rankings(int m) {
  check_alternative_count(m);
  const auto count = factorial(m);
  std::vector<Ranking> out;
  out.reserve(count);
  for (std::uint32_t c = 0; c < count; ++c) out.push_back(Ranking::from_code(c, m));
  return out;
}

/// Mixed-radix codec for profiles of n rankings; player 0 is the least
/// significant digit. Throws if (m!)^n exceeds `cap`.
class ProfileCodec {
 public:
  ProfileCodec(int m, int n, std::uint64_t cap = std::numeric_limits<std::uint64_t>::max())
      : m_(m), n_(n), radix_(factorial(m)) {
    check_alternative_count(m);
    if (n < 1) throw validation_error("a profile needs at least one player");
    stride_.reserve(static_cast<std::size_t>(n));
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) {
      stride_.push_back(s);
      if (s > cap / radix_)
        throw enumeration_too_large("(" + std::to_string(m) + "!)^" + std::to_string(n) +
                                    " profiles exceed the enumeration cap of " + std::to_string(cap) +
                                    "; use Monte Carlo estimation instead");
      s *= radix_;
    }
    size_ = s;
  }

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::uint64_t radix() const noexcept { return radix_; }
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t stride(int player) const noexcept { return stride_[static_cast<std::size_t>(player)]; }

  std::uint32_t digit(std::uint64_t code, int player) const noexcept {
    return static_cast<std::uint32_t>((code / stride(player)) % radix_);
  }

  std::uint64_t replace_digit(std::uint64_t code, int player, std::uint32_t digit) const noexcept {
    return code - static_cast<std::uint64_t>(this->digit(code, player)) * stride(player) +
           static_cast<std::uint64_t>(digit) * stride(player);
  }

  std::uint64_t encode(std::span<const Ranking> profile) const {
    if (static_cast<int>(profile.size()) != n_) throw validation_error("profile arity mismatch");
    std::uint64_t code = 0;
    for (int i = n_ - 1; i >= 0; --i) code = code * radix_ + profile[static_cast<std::size_t>(i)].code();
    return code;
  }

  void decode(std::uint64_t code, std::span<Ranking> out) const {
    for (int i = 0; i < n_; ++i) {
      out[static_cast<std::size_t>(i)] = Ranking::from_code(static_cast<std::uint32_t>(code % radix_), m_);
      code /= radix_;
    }
  }

 private:
  int m_;
  int n_;
  std::uint64_t radix_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> stride_;
};

/// Walks profiles in code order starting from `start`, rebuilding only the
/// digits that change.
class ProfileOdometer {
 public:
  ProfileOdometer(const ProfileCodec& codec, std::uint64_t start = 0)
      : radix_(static_cast<std::uint32_t>(codec.radix())), table_(all_rankings(codec.m())) {
    digits_.resize(static_cast<std::size_t>(codec.n()));
    current_.resize(static_cast<std::size_t>(codec.n()));
    for (int i = 0; i < codec.n(); ++i) {
      digits_[static_cast<std::size_t>(i)] = codec.digit(start, i);
      current_[static_cast<std::size_t>(i)] = table_[digits_[static_cast<std::size_t>(i)]];
    }
  }

  std::span<const Ranking> profile() const noexcept { return current_; }

  void advance() noexcept {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (++digits_[i] < radix_) {
        current_[i] = table_[digits_[i]];
        return;
      }
      digits_[i] = 0;
      current_[i] = table_[0];
    }
  }

 private:
  std::uint32_t radix_;
  std::vector<Ranking> table_;
  std::vector<std::uint32_t> digits_;
  std::vector<Ranking> current_;
};

/// One ranking per player.
struct Profile {
  std::vector<Ranking> rankings;

  static Profile parse(std::span<const std::string> texts, std::span<const std::string> labels) {
    Profile p;
    p.rankings.reserve(texts.size());
    for (const auto& t : texts) p.rankings.push_back(Ranking::from_string(t, labels));
    return p;
  }

  /// Space-separated rankings with default labels, e.g. "bca abc cba".
  static Profile parse(std::string_view text, int m) {
    const auto labels = default_labels(m);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start < text.size()) {
      const auto end = text.find(' ', start);
      const auto piece = text.substr(start, end - start);
      if (!piece.empty()) parts.emplace_back(piece);
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return parse(parts, labels);
  }

  Profile with_replaced(int player, const Ranking& r) const {
    Profile p = *this;
    p.rankings.at(static_cast<std::size_t>(player)) = r;
    return p;
  }

  std::size_t size() const noexcept { return rankings.size(); }
  operator std::span<const Ranking>() const noexcept { return rankings; }
};

}  // namespace wcpower

#endif  // WCPOWER_RANKING_HPP
