// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_CORE_POLYGON_HPP
#define RTL_CORE_POLYGON_HPP

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rtl/core/bounding_box.hpp"
#include "rtl/core/vector.hpp"

namespace rtl {

/// Closed planar polygon in 2-D, vertices in traversal order.
template <typename S = double>
class Polygon2D {
public:
  using ElementType = S;
  static constexpr int dimensionality = 2;

  Polygon2D() = default;

  explicit Polygon2D(std::vector<VectorND<2, S>> vertices)
      : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
      throw std::invalid_argument("Polygon2D: fewer than 3 vertices");
    }
  }

  const std::vector<VectorND<2, S>>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  bool operator==(const Polygon2D& o) const { return vertices_ == o.vertices_; }
  bool operator!=(const Polygon2D& o) const { return !(*this == o); }

private:
  std::vector<VectorND<2, S>> vertices_;
};

/// Closed polygon embedded in a 3-D plane. The plane is derived from the
/// vertices (Newell normal through the centroid) and every vertex must lie on
/// it within 1e-9 of the vertex-cloud extent.
template <typename S = double>
class Polygon3D {
public:
  using ElementType = S;
  static constexpr int dimensionality = 3;

  Polygon3D() = default;

  explicit Polygon3D(std::vector<VectorND<3, S>> vertices)
      : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
      throw std::invalid_argument("Polygon3D: fewer than 3 vertices");
    }
    computePlane();
    validatePlanarity();
  }

  /// Trusted constructor with a known supporting plane; planarity still checked.
  Polygon3D(std::vector<VectorND<3, S>> vertices, const VectorND<3, S>& normal, S offset)
      : vertices_(std::move(vertices)), normal_(normal.normalized()), offset_(offset) {
    if (vertices_.size() < 3) {
      throw std::invalid_argument("Polygon3D: fewer than 3 vertices");
    }
    validatePlanarity();
  }

  const std::vector<VectorND<3, S>>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Unit plane normal; the plane satisfies dot(normal, x) == offset.
  const VectorND<3, S>& normal() const { return normal_; }
  S offset() const { return offset_; }

  bool operator==(const Polygon3D& o) const { return vertices_ == o.vertices_; }
  bool operator!=(const Polygon3D& o) const { return !(*this == o); }

private:
  void computePlane() {
    // Newell's method: robust for arbitrary planar loops.
    VectorND<3, S> n = VectorND<3, S>::zeros();
    VectorND<3, S> centroid = VectorND<3, S>::zeros();
    const std::size_t k = vertices_.size();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& a = vertices_[i];
      const auto& b = vertices_[(i + 1) % k];
      n[0] += (a.y() - b.y()) * (a.z() + b.z());
      n[1] += (a.z() - b.z()) * (a.x() + b.x());
      n[2] += (a.x() - b.x()) * (a.y() + b.y());
      centroid += a;
    }
    if (n.norm() == S(0)) {
      throw std::invalid_argument("Polygon3D: degenerate vertex loop, no plane");
    }
    normal_ = n.normalized();
    offset_ = normal_.dot(centroid / static_cast<S>(k));
  }

  void validatePlanarity() const {
    const auto box = BoundingBoxND<3, S>::fromPoints(vertices_);
    const S tol = S(1e-9) * std::max(box.diagonal(), S(1e-30));
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (std::abs(normal_.dot(vertices_[i]) - offset_) > tol) {
        throw std::invalid_argument("Polygon3D: vertex " + std::to_string(i) +
                                    " off the supporting plane");
      }
    }
  }

  std::vector<VectorND<3, S>> vertices_;
  VectorND<3, S> normal_;
  S offset_;
};

using Polygon2f = Polygon2D<float>;
using Polygon3f = Polygon3D<float>;
using Polygon2d = Polygon2D<double>;
using Polygon3d = Polygon3D<double>;

}  // namespace rtl

#endif  // RTL_CORE_POLYGON_HPP
