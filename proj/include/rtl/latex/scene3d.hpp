// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_LATEX_SCENE3D_HPP
#define RTL_LATEX_SCENE3D_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rtl/core/line_segment.hpp"
#include "rtl/core/vector.hpp"
#include "rtl/latex/figure2d.hpp"
#include "rtl/transform/rigid_tf.hpp"

namespace rtl {

/// Camera projection model of the 3-D renderer.
struct Projection {
  enum class Kind { Orthographic, Pinhole };
  Kind kind = Kind::Orthographic;
  double focal = 1.0;  // pinhole only
};

/// Basic 3-D scene: styled primitives plus a camera. Rendering projects the
/// primitives to the camera plane, depth-sorts them back to front by mean
/// camera-space z (painter's algorithm) and hands the result to the 2-D
/// figure renderer.
class Scene3D {
public:
  struct PointSet {
    std::vector<Vector3d> points;
    Style style;
  };
  struct PolylinePrim {
    std::vector<Vector3d> points;
    Style style;
  };
  struct SegmentPrim {
    LineSegment3d segment;
    Style style;
  };
  struct PolygonPrim {
    std::vector<Vector3d> vertices;
    Style style;
  };
  using Primitive = std::variant<PointSet, PolylinePrim, SegmentPrim, PolygonPrim>;

  void addPoints(std::vector<Vector3d> points, const Style& style) {
    primitives_.push_back(PointSet{std::move(points), style});
  }
  void addPolyline(std::vector<Vector3d> points, const Style& style) {
    primitives_.push_back(PolylinePrim{std::move(points), style});
  }
  void addSegment(const LineSegment3d& segment, const Style& style) {
    primitives_.push_back(SegmentPrim{segment, style});
  }
  void addPolygon(std::vector<Vector3d> vertices, const Style& style) {
    primitives_.push_back(PolygonPrim{std::move(vertices), style});
  }

  /// World-to-camera transformation; the camera looks along +z.
  void setCamera(const RigidTf3d& world_to_camera) { camera_ = world_to_camera; }
  void setProjection(const Projection& projection) { projection_ = projection; }
  void setScale(double mm_per_unit) { scale_mm_ = mm_per_unit; }

  const std::vector<Primitive>& primitives() const { return primitives_; }
  const RigidTf3d& camera() const { return camera_; }
  const Projection& projection() const { return projection_; }
  double scale() const { return scale_mm_; }

private:
  std::vector<Primitive> primitives_;
  RigidTf3d camera_ = RigidTf3d::identity();
  Projection projection_;
  double scale_mm_ = 10.0;
};

/// Projected scene: the flattened figure plus a flag raised when every
/// primitive was culled (all points behind a pinhole camera).
struct SceneProjection {
  Figure2D figure;
  bool all_culled = false;
};

namespace detail {

struct ProjectedPrimitive {
  Figure2D::Primitive primitive;
  double mean_depth;
};

inline void addProjected(Figure2D& figure, Figure2D::PointSet&& p) {
  figure.addPoints(std::move(p.points), p.style);
}
inline void addProjected(Figure2D& figure, Figure2D::PolylinePrim&& p) {
  figure.addPolyline(std::move(p.points), p.style);
}
inline void addProjected(Figure2D& figure, Figure2D::SegmentPrim&& p) {
  figure.addSegment(p.segment, p.style);
}
inline void addProjected(Figure2D& figure, Figure2D::PolygonPrim&& p) {
  figure.addPolygon(std::move(p.vertices), p.style);
}
inline void addProjected(Figure2D& figure, Figure2D::LabelPrim&& p) {
  figure.addLabel(p.position, std::move(p.text), p.style);
}

}  // namespace detail

/// Projects the scene through its camera. Pinhole projection culls points at
/// or behind the camera plane; compound primitives with any culled vertex are
/// dropped whole (no clipping in this basic renderer).
inline SceneProjection projectScene(const Scene3D& scene) {
  const bool pinhole = scene.projection().kind == Projection::Kind::Pinhole;
  const double focal = scene.projection().focal;
  if (pinhole && !(focal > 0.0)) {
    throw std::invalid_argument("Scene3D: pinhole focal length must be positive");
  }

  const auto project = [&](const Vector3d& world, Vector2d& out, double& depth) {
    const Vector3d cam = scene.camera()(world);
    depth = cam.z();
    if (pinhole) {
      if (cam.z() <= 0.0) {
        return false;
      }
      out = Vector2d(cam.x() * focal / cam.z(), cam.y() * focal / cam.z());
    } else {
      out = Vector2d(cam.x(), cam.y());
    }
    return true;
  };

  const auto projectAll = [&](const std::vector<Vector3d>& pts,
                              std::vector<Vector2d>& out, double& mean_depth) {
    out.clear();
    mean_depth = 0.0;
    for (const auto& p : pts) {
      Vector2d q;
      double depth;
      if (!project(p, q, depth)) {
        return false;
      }
      out.push_back(q);
      mean_depth += depth;
    }
    mean_depth /= static_cast<double>(pts.size());
    return true;
  };

  std::vector<detail::ProjectedPrimitive> projected;
  for (const auto& prim : scene.primitives()) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Scene3D::PointSet>) {
            // Point sets cull per point rather than as a whole.
            std::vector<Vector2d> pts;
            double mean_depth = 0.0;
            for (const auto& world : p.points) {
              Vector2d q;
              double depth;
              if (project(world, q, depth)) {
                pts.push_back(q);
                mean_depth += depth;
              }
            }
            if (!pts.empty()) {
              mean_depth /= static_cast<double>(pts.size());
              projected.push_back({Figure2D::PointSet{std::move(pts), p.style},
                                   mean_depth});
            }
          } else if constexpr (std::is_same_v<T, Scene3D::PolylinePrim>) {
            std::vector<Vector2d> pts;
            double mean_depth;
            if (!p.points.empty() && projectAll(p.points, pts, mean_depth)) {
              projected.push_back({Figure2D::PolylinePrim{std::move(pts), p.style},
                                   mean_depth});
            }
          } else if constexpr (std::is_same_v<T, Scene3D::SegmentPrim>) {
            std::vector<Vector2d> pts;
            double mean_depth;
            const std::vector<Vector3d> ends{p.segment.begin(), p.segment.end()};
            if (projectAll(ends, pts, mean_depth)) {
              projected.push_back(
                  {Figure2D::SegmentPrim{LineSegment2d(pts[0], pts[1]), p.style},
                   mean_depth});
            }
          } else if constexpr (std::is_same_v<T, Scene3D::PolygonPrim>) {
            std::vector<Vector2d> pts;
            double mean_depth;
            if (!p.vertices.empty() && projectAll(p.vertices, pts, mean_depth)) {
              projected.push_back({Figure2D::PolygonPrim{std::move(pts), p.style},
                                   mean_depth});
            }
          }
        },
        prim);
  }

  // Painter's order: farther primitives first, stable among equal depths.
  std::stable_sort(projected.begin(), projected.end(),
                   [](const auto& a, const auto& b) {
                     return a.mean_depth > b.mean_depth;
                   });

  SceneProjection out;
  out.figure.setScale(scene.scale());
  for (auto& p : projected) {
    // Re-insert through the figure's draw list to keep painter's order.
    std::visit(
        [&](auto&& prim) { detail::addProjected(out.figure, std::move(prim)); },
        std::move(p.primitive));
  }
  out.all_culled = !scene.primitives().empty() && out.figure.empty();
  return out;
}

/// Renders the scene to TikZ source; `all_culled` (optional) reports an empty
/// pinhole projection.
inline std::string renderScene(const Scene3D& scene, bool* all_culled = nullptr) {
  SceneProjection projection = projectScene(scene);
  if (all_culled != nullptr) {
    *all_culled = projection.all_culled;
  }
  return renderFigure(projection.figure);
}

}  // namespace rtl

#endif  // RTL_LATEX_SCENE3D_HPP
