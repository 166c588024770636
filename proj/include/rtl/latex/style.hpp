// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_LATEX_STYLE_HPP
#define RTL_LATEX_STYLE_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtl {

/// RGB color with components in [0, 1].
struct Color {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  bool operator==(const Color& o) const { return r == o.r && g == o.g && b == o.b; }
  bool operator!=(const Color& o) const { return !(*this == o); }

  static Color black() { return {0.0, 0.0, 0.0}; }
  static Color white() { return {1.0, 1.0, 1.0}; }

  static Color fromHsv(double h, double s, double v) {
    h = h - std::floor(h);
    const double c = v * s;
    const double hp = h * 6.0;
    const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0.0, g = 0.0, b = 0.0;
    switch (static_cast<int>(hp)) {
      case 0: r = c; g = x; break;
      case 1: r = x; g = c; break;
      case 2: g = c; b = x; break;
      case 3: g = x; b = c; break;
      case 4: r = x; b = c; break;
      default: r = c; b = x; break;
    }
    const double m = v - c;
    return {r + m, g + m, b + m};
  }
};

/// Deterministic palette for cluster coloring: golden-angle hue steps, never
/// black (black is reserved for outliers).
inline Color clusterColor(std::size_t index) {
  constexpr double kGoldenRatioConjugate = 0.6180339887498949;
  const double hue = std::fmod(static_cast<double>(index) * kGoldenRatioConjugate, 1.0);
  return Color::fromHsv(hue, 0.85, 0.8);
}

enum class Marker { None, Dot, Cross, Square };

/// Drawing attributes of one figure primitive.
struct Style {
  Color color = Color::black();
  double line_width = 0.5;  // points
  Marker marker = Marker::None;
  std::optional<Color> fill;

  void validate() const {
    const auto inRange = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!inRange(color.r) || !inRange(color.g) || !inRange(color.b) ||
        (fill && (!inRange(fill->r) || !inRange(fill->g) || !inRange(fill->b)))) {
      throw std::invalid_argument("Style: color component out of [0,1]");
    }
    if (line_width < 0.0) {
      throw std::invalid_argument("Style: negative line width");
    }
  }
};

namespace detail {

/// Fixed 6-decimal number formatting used for all emitted coordinates, so
/// renders are byte-identical across runs and platforms.
inline std::string fmt6(double value) {
  if (value == 0.0) {
    value = 0.0;  // collapse negative zero
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

inline std::string fmtColor(const Color& c) {
  return fmt6(c.r) + "," + fmt6(c.g) + "," + fmt6(c.b);
}

/// Registry assigning names c0, c1, ... to distinct colors in first-use order.
class ColorTable {
public:
  std::string nameOf(const Color& c) {
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (colors_[i] == c) {
        return "c" + std::to_string(i);
      }
    }
    colors_.push_back(c);
    return "c" + std::to_string(colors_.size() - 1);
  }

  std::string definitions() const {
    std::string out;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      out += "\\definecolor{c" + std::to_string(i) + "}{rgb}{" +
             fmtColor(colors_[i]) + "}\n";
    }
    return out;
  }

private:
  std::vector<Color> colors_;
};

}  // namespace detail

}  // namespace rtl

#endif  // RTL_LATEX_STYLE_HPP
