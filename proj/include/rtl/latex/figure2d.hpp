// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_LATEX_FIGURE2D_HPP
#define RTL_LATEX_FIGURE2D_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rtl/core/line_segment.hpp"
#include "rtl/core/polygon.hpp"
#include "rtl/core/vector.hpp"
#include "rtl/latex/style.hpp"

namespace rtl {

/// Optional coordinate axes drawn under the figure content.
struct Axes {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  double tick_step = 1.0;
};

/// 2-D vector drawing: an ordered list of styled primitives rendered to a
/// TikZ picture in painter's order.
class Figure2D {
public:
  struct PointSet {
    std::vector<Vector2d> points;
    Style style;
  };
  struct PolylinePrim {
    std::vector<Vector2d> points;
    Style style;
  };
  struct SegmentPrim {
    LineSegment2d segment;
    Style style;
  };
  struct PolygonPrim {
    std::vector<Vector2d> vertices;
    Style style;
  };
  struct LabelPrim {
    Vector2d position;
    std::string text;
    Style style;
  };
  using Primitive =
      std::variant<PointSet, PolylinePrim, SegmentPrim, PolygonPrim, LabelPrim>;

  void addPoints(std::vector<Vector2d> points, const Style& style) {
    primitives_.push_back(PointSet{std::move(points), style});
  }
  void addPolyline(std::vector<Vector2d> points, const Style& style) {
    primitives_.push_back(PolylinePrim{std::move(points), style});
  }
  void addSegment(const LineSegment2d& segment, const Style& style) {
    primitives_.push_back(SegmentPrim{segment, style});
  }
  void addPolygon(std::vector<Vector2d> vertices, const Style& style) {
    primitives_.push_back(PolygonPrim{std::move(vertices), style});
  }
  void addPolygon(const Polygon2d& polygon, const Style& style) {
    primitives_.push_back(PolygonPrim{polygon.vertices(), style});
  }
  void addLabel(const Vector2d& position, std::string text, const Style& style) {
    primitives_.push_back(LabelPrim{position, std::move(text), style});
  }

  void setAxes(const Axes& axes) { axes_ = axes; }
  void setScale(double mm_per_unit) { scale_mm_ = mm_per_unit; }

  const std::vector<Primitive>& primitives() const { return primitives_; }
  const std::optional<Axes>& axes() const { return axes_; }
  double scale() const { return scale_mm_; }
  bool empty() const { return primitives_.empty(); }

private:
  std::vector<Primitive> primitives_;
  std::optional<Axes> axes_;
  double scale_mm_ = 10.0;
};

namespace detail {

inline std::string texCoord(const Vector2d& p) {
  return "(" + fmt6(p.x()) + "," + fmt6(p.y()) + ")";
}

inline void requireFinite(const Vector2d& p, std::size_t primitive_index) {
  if (!std::isfinite(p.x()) || !std::isfinite(p.y())) {
    throw std::invalid_argument("primitive " + std::to_string(primitive_index) +
                                ": non-finite coordinate");
  }
}

inline std::string tickLabel(double value) {
  if (value == 0.0) {
    value = 0.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

inline std::string renderAxes(const Axes& axes, const std::string& color_name) {
  std::string out;
  const std::string opts = "[" + color_name + ",line width=0.400000pt,->]";
  out += "\\draw" + opts + " (" + fmt6(axes.x_min) + ",0.000000) -- (" +
         fmt6(axes.x_max) + ",0.000000);\n";
  out += "\\draw" + opts + " (0.000000," + fmt6(axes.y_min) + ") -- (0.000000," +
         fmt6(axes.y_max) + ");\n";
  if (axes.tick_step > 0.0) {
    for (double t = std::ceil(axes.x_min / axes.tick_step) * axes.tick_step;
         t <= axes.x_max; t += axes.tick_step) {
      if (t == 0.0) continue;
      out += "\\draw[" + color_name + "] (" + fmt6(t) +
             ",0.000000) +(0,-1.5pt) -- +(0,1.5pt) node[below=3pt,font=\\tiny] {" +
             tickLabel(t) + "};\n";
    }
    for (double t = std::ceil(axes.y_min / axes.tick_step) * axes.tick_step;
         t <= axes.y_max; t += axes.tick_step) {
      if (t == 0.0) continue;
      out += "\\draw[" + color_name + "] (0.000000," + fmt6(t) +
             ") +(-1.5pt,0) -- +(1.5pt,0) node[left=3pt,font=\\tiny] {" +
             tickLabel(t) + "};\n";
    }
  }
  return out;
}

}  // namespace detail

/// Renders the figure to a self-contained TikZ picture. Deterministic: the
/// same figure always yields byte-identical source. Each distinct color is
/// defined exactly once; primitives are emitted in draw-list order.
inline std::string renderFigure(const Figure2D& figure) {
  detail::ColorTable colors;
  std::string body;

  if (figure.axes()) {
    body += detail::renderAxes(*figure.axes(), colors.nameOf(Color::black()));
  }

  for (std::size_t idx = 0; idx < figure.primitives().size(); ++idx) {
    const auto& prim = figure.primitives()[idx];
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          p.style.validate();
          const std::string cname = colors.nameOf(p.style.color);
          const std::string width =
              "line width=" + detail::fmt6(p.style.line_width) + "pt";

          if constexpr (std::is_same_v<T, Figure2D::PointSet>) {
            for (const auto& pt : p.points) {
              detail::requireFinite(pt, idx);
              switch (p.style.marker) {
                case Marker::None:
                  break;
                case Marker::Dot:
                  body += "\\fill[" + cname + "] " + detail::texCoord(pt) +
                          " circle (1.200000pt);\n";
                  break;
                case Marker::Cross:
                  body += "\\draw[" + cname + "," + width + "] " +
                          detail::texCoord(pt) +
                          " +(-1.5pt,-1.5pt) -- +(1.5pt,1.5pt) " +
                          detail::texCoord(pt) +
                          " +(-1.5pt,1.5pt) -- +(1.5pt,-1.5pt);\n";
                  break;
                case Marker::Square:
                  body += "\\draw[" + cname + "," + width + "] " +
                          detail::texCoord(pt) +
                          " +(-1.5pt,-1.5pt) rectangle +(1.5pt,1.5pt);\n";
                  break;
              }
            }
          } else if constexpr (std::is_same_v<T, Figure2D::PolylinePrim>) {
            if (p.points.size() >= 2) {
              body += "\\draw[" + cname + "," + width + "]";
              for (std::size_t i = 0; i < p.points.size(); ++i) {
                detail::requireFinite(p.points[i], idx);
                body += (i == 0 ? " " : " -- ") + detail::texCoord(p.points[i]);
              }
              body += ";\n";
            }
          } else if constexpr (std::is_same_v<T, Figure2D::SegmentPrim>) {
            detail::requireFinite(p.segment.begin(), idx);
            detail::requireFinite(p.segment.end(), idx);
            body += "\\draw[" + cname + "," + width + "] " +
                    detail::texCoord(p.segment.begin()) + " -- " +
                    detail::texCoord(p.segment.end()) + ";\n";
          } else if constexpr (std::is_same_v<T, Figure2D::PolygonPrim>) {
            std::string cmd = "\\draw[" + cname + "," + width;
            if (p.style.fill) {
              cmd = "\\filldraw[" + cname + ",fill=" +
                    colors.nameOf(*p.style.fill) + "," + width;
            }
            body += cmd + "]";
            for (std::size_t i = 0; i < p.vertices.size(); ++i) {
              detail::requireFinite(p.vertices[i], idx);
              body += (i == 0 ? " " : " -- ") + detail::texCoord(p.vertices[i]);
            }
            body += " -- cycle;\n";
          } else if constexpr (std::is_same_v<T, Figure2D::LabelPrim>) {
            detail::requireFinite(p.position, idx);
            body += "\\node[" + cname + "] at " + detail::texCoord(p.position) +
                    " {" + p.text + "};\n";
          }
        },
        prim);
  }

  std::string out = "\\begin{tikzpicture}[x=" + detail::fmt6(figure.scale()) +
                    "mm,y=" + detail::fmt6(figure.scale()) + "mm]\n";
  out += colors.definitions();
  out += body;
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace rtl

#endif  // RTL_LATEX_FIGURE2D_HPP
