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

#ifndef WCPOWER_RENDER_HPP
#define WCPOWER_RENDER_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wcpower/format.hpp"
#include "wcpower/simplex.hpp"

namespace wcpower {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s = "#";
    for (auto c : {r, g, b}) {
      s += digits[c >> 4];
      s += digits[c & 15];
    }
    return s;
  }
};

struct TernaryPalette {
  Rgb a_greater{0x1a, 0x9e, 0x3a};  // green
  Rgb equal{0xf2, 0xd0, 0x24};      // yellow
  Rgb b_greater{0xd7, 0x30, 0x27};  // red
  /// Opacity of the smallest nonzero difference when shading is on.
  double min_opacity = 0.25;
};

/// Fixed colour for each of the 31 nonempty rule sets.
inline Rgb rule_set_color(RuleSet set) {
  static constexpr std::array<Rgb, 12> base{{{0x1f, 0x77, 0xb4},
                                             {0xff, 0x7f, 0x0e},
                                             {0x2c, 0xa0, 0x2c},
                                             {0xd6, 0x27, 0x28},
                                             {0x94, 0x67, 0xbd},
                                             {0x8c, 0x56, 0x4b},
                                             {0xe3, 0x77, 0xc2},
                                             {0x7f, 0x7f, 0x7f},
                                             {0xbc, 0xbd, 0x22},
                                             {0x17, 0xbe, 0xcf},
                                             {0xf2, 0xd0, 0x24},
                                             {0x39, 0x3b, 0x79}}};
  if (set == RuleSet::all()) return {0xf2, 0xd0, 0x24};
  const auto idx = static_cast<std::size_t>(set.mask()) * 7U % base.size();
  const Rgb c = base[idx];
  // Sets sharing a base colour are told apart by lightness.
  const double shade = 1.0 - 0.22 * static_cast<double>((set.mask() * 7U / base.size()) % 3);
  auto adj = [&](std::uint8_t v) { return static_cast<std::uint8_t>(std::lround(v * shade)); };
  return {adj(c.r), adj(c.g), adj(c.b)};
}

namespace detail {

struct Point2 {
  double x, y;
};

/// Player 1 at the top vertex (1/2, sqrt(3)/2), player 2 at (0, 0), player
/// 3 at (1, 0).
inline Point2 barycentric_to_cartesian(double t1, double t2, double t3) {
  (void)t2;
  const double h = std::sqrt(3.0) / 2.0;
  return {t1 * 0.5 + t3 * 1.0, t1 * h};
}

/// Clips a polygon to the half-plane left of the directed edge a -> b.
inline std::vector<Point2> clip_edge(const std::vector<Point2>& poly, Point2 a, Point2 b) {
  auto inside = [&](Point2 p) { return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) >= -1e-12; };
  auto cross_point = [&](Point2 p, Point2 q) {
    const double d1 = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    const double d2 = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
    const double t = d1 / (d1 - d2);
    return Point2{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
  };
  std::vector<Point2> out;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point2 cur = poly[k];
    const Point2 prev = poly[(k + poly.size() - 1) % poly.size()];
    if (inside(cur)) {
      if (!inside(prev)) out.push_back(cross_point(prev, cur));
      out.push_back(cur);
    } else if (inside(prev)) {
      out.push_back(cross_point(prev, cur));
    }
  }
  return out;
}

/// The hexagonal cell of a lattice point (the six triangle slivers joining
/// it to the centroids of its neighbouring lattice triangles), clipped to
/// the simplex.
inline std::vector<Point2> lattice_cell(const WeightTriple& w, int resolution) {
  const double d = resolution;
  const Point2 c = barycentric_to_cartesian(w[0] / d, w[1] / d, w[2] / d);
  const double radius = 1.0 / (d * std::sqrt(3.0));
  constexpr double pi = 3.14159265358979323846;
  std::vector<Point2> hex;
  for (int k = 0; k < 6; ++k) {
    const double angle = pi / 6.0 + k * pi / 3.0;
    hex.push_back({c.x + radius * std::cos(angle), c.y + radius * std::sin(angle)});
  }
  const Point2 v1 = barycentric_to_cartesian(1, 0, 0);
  const Point2 v2 = barycentric_to_cartesian(0, 1, 0);
  const Point2 v3 = barycentric_to_cartesian(0, 0, 1);
  hex = clip_edge(hex, v2, v3);
  hex = clip_edge(hex, v3, v1);
  hex = clip_edge(hex, v1, v2);
  return hex;
}

class SvgCanvas {
 public:
  static constexpr double kSide = 520.0;
  static constexpr double kMargin = 60.0;

  explicit SvgCanvas(std::string title, double legend_height = 0.0) : legend_height_(legend_height) {
    const double w = kSide + 2 * kMargin;
    const double h = kSide * std::sqrt(3.0) / 2.0 + 2 * kMargin + legend_height_;
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(w, 0) << "\" height=\""
        << format_fixed(h, 0) << "\" viewBox=\"0 0 " << format_fixed(w, 0) << ' ' << format_fixed(h, 0) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
        << "<text x=\"" << format_fixed(w / 2, 1) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
        << "text-anchor=\"middle\">" << escape(title) << "</text>\n";
  }

  Point2 map(Point2 p) const {
    return {kMargin + p.x * kSide, kMargin + (std::sqrt(3.0) / 2.0 - p.y) * kSide};
  }

  void polygon(const std::vector<Point2>& pts, const Rgb& fill, double opacity) {
    if (pts.size() < 3) return;
    os_ << "<polygon points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const Point2 q = map(pts[k]);
      if (k) os_ << ' ';
      os_ << format_fixed(q.x, 2) << ',' << format_fixed(q.y, 2);
    }
    os_ << "\" fill=\"" << fill.hex() << '"';
    if (opacity < 1.0) os_ << " fill-opacity=\"" << format_fixed(opacity, 3) << '"';
    os_ << "/>\n";
  }

  void outline_and_labels() {
    const Point2 v1 = map(barycentric_to_cartesian(1, 0, 0));
    const Point2 v2 = map(barycentric_to_cartesian(0, 1, 0));
    const Point2 v3 = map(barycentric_to_cartesian(0, 0, 1));
    os_ << "<polygon points=\"" << format_fixed(v1.x, 2) << ',' << format_fixed(v1.y, 2) << ' '
        << format_fixed(v2.x, 2) << ',' << format_fixed(v2.y, 2) << ' ' << format_fixed(v3.x, 2) << ','
        << format_fixed(v3.y, 2) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    text(v1.x, v1.y - 10, "player 1", "middle");
    text(v2.x - 6, v2.y + 20, "player 2", "start");
    text(v3.x + 6, v3.y + 20, "player 3", "end");
  }

  void text(double x, double y, const std::string& s, const char* anchor, int size = 13) {
    os_ << "<text x=\"" << format_fixed(x, 1) << "\" y=\"" << format_fixed(y, 1)
        << "\" font-family=\"sans-serif\" font-size=\"" << size << "\" text-anchor=\"" << anchor << "\">"
        << escape(s) << "</text>\n";
  }

  void swatch(double x, double y, const Rgb& fill) {
    os_ << "<rect x=\"" << format_fixed(x, 1) << "\" y=\"" << format_fixed(y, 1)
        << "\" width=\"14\" height=\"14\" fill=\"" << fill.hex() << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
  }

  double legend_top() const { return kSide * std::sqrt(3.0) / 2.0 + 2 * kMargin; }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
      }
    }
    return out;
  }

  double legend_height_;
  std::ostringstream os_;
};

}  // namespace detail

/// Ternary map of a pairwise comparison. Comparisons involving Borda are
/// shaded by |diff| relative to the grid maximum.
inline std::string ternary_svg(const PairwiseClassification& c, const TernaryPalette& palette = {}) {
  const std::string a(rule_name(c.rule_a));
  const std::string b(rule_name(c.rule_b));
  detail::SvgCanvas canvas(a + " vs. " + b + ", player " + std::to_string(c.player + 1) +
                               ", D = " + std::to_string(c.resolution),
                           60.0);
  const bool shaded = c.rule_a == Rule::borda || c.rule_b == Rule::borda;
  const double max_diff = c.max_abs_diff().to_double();
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    const Rgb& fill = c.classes[k] == Comparison::a_greater   ? palette.a_greater
                      : c.classes[k] == Comparison::b_greater ? palette.b_greater
                                                              : palette.equal;
    double opacity = 1.0;
    if (shaded && c.classes[k] != Comparison::equal && max_diff > 0.0)
      opacity = palette.min_opacity + (1.0 - palette.min_opacity) * (c.diffs[k].abs().to_double() / max_diff);
    canvas.polygon(detail::lattice_cell(c.points[k], c.resolution), fill, opacity);
  }
  canvas.outline_and_labels();
  const double y = canvas.legend_top();
  canvas.swatch(40, y, palette.a_greater);
  canvas.text(60, y + 12, a + " greater", "start");
  canvas.swatch(240, y, palette.equal);
  canvas.text(260, y + 12, "equal", "start");
  canvas.swatch(360, y, palette.b_greater);
  canvas.text(380, y + 12, b + " greater", "start");
  return canvas.finish();
}

/// Ternary map of influence-maximizing rule sets, one colour per set, with
/// a legend listing every set that occurs.
inline std::string ternary_svg(const BestRuleMap& map) {
  const auto sets = map.distinct_sets();
  const double legend_height = 20.0 * static_cast<double>((sets.size() + 3) / 4) + 20.0;
  detail::SvgCanvas canvas("maximal influence, player " + std::to_string(map.player + 1) +
                               ", D = " + std::to_string(map.resolution),
                           legend_height);
  for (std::size_t k = 0; k < map.points.size(); ++k)
    canvas.polygon(detail::lattice_cell(map.points[k], map.resolution), rule_set_color(map.best[k]), 1.0);
  canvas.outline_and_labels();
  const double top = canvas.legend_top();
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const double x = 40.0 + 150.0 * static_cast<double>(k % 4);
    const double y = top + 20.0 * static_cast<double>(k / 4);
    canvas.swatch(x, y, rule_set_color(sets[k]));
    canvas.text(x + 20, y + 12, sets[k].str(), "start");
  }
  return canvas.finish();
}

}  // namespace wcpower

#endif  // WCPOWER_RENDER_HPP
