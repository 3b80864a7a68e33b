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

#ifndef WCPOWER_RATIONAL_HPP
#define WCPOWER_RATIONAL_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "wcpower/errors.hpp"

namespace wcpower {

/// Exact fraction over 64-bit integers, always kept in lowest terms with a
/// positive denominator. Products and comparisons go through 128-bit
/// intermediates; a result that does not fit back into 64 bits throws.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() = default;

  constexpr Rational(int_type numerator, int_type denominator = 1) {
    if (denominator == 0) throw validation_error("rational with zero denominator");
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    const int_type g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
  }

  constexpr int_type num() const noexcept { return num_; }
  constexpr int_type den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend constexpr Rational operator-(const Rational& a) { return from_wide(-static_cast<__int128>(a.num_), a.den_); }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }

  friend constexpr Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }

  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw validation_error("rational division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "n/d", or just "n" when the denominator is one.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Inverse of str(). Accepts "n" or "n/d".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    int_type n = 0;
    int_type d = 1;
    auto parse_int = [&](std::string_view part, int_type& out) {
      const auto* first = part.data();
      const auto* last = part.data() + part.size();
      auto [ptr, ec] = std::from_chars(first, last, out);
      if (ec != std::errc{} || ptr != last || part.empty())
        throw validation_error("malformed rational '" + std::string(text) + "'");
    };
    parse_int(num_text, n);
    if (slash != std::string_view::npos) parse_int(text.substr(slash + 1), d);
    return Rational(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static constexpr __int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static constexpr Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd_wide(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<int_type>::min();
    constexpr __int128 hi = std::numeric_limits<int_type>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<int_type>(n);
    r.den_ = static_cast<int_type>(d);
    return r;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

}  // namespace wcpower

#endif  // WCPOWER_RATIONAL_HPP
