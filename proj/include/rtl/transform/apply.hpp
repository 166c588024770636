// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_TRANSFORM_APPLY_HPP
#define RTL_TRANSFORM_APPLY_HPP

#include <array>
#include <type_traits>
#include <variant>
#include <vector>

#include "rtl/core/bounding_box.hpp"
#include "rtl/core/frustum.hpp"
#include "rtl/core/line_segment.hpp"
#include "rtl/core/polygon.hpp"
#include "rtl/core/vector.hpp"
#include "rtl/transform/general_tf.hpp"

namespace rtl {

namespace detail {

template <int D, typename S>
RotationND<D, S> rotationOf(const TranslationND<D, S>&) {
  return RotationND<D, S>::identity();
}

template <int D, typename S>
RotationND<D, S> rotationOf(const RotationND<D, S>& tf) {
  return tf;
}

template <int D, typename S>
RotationND<D, S> rotationOf(const RigidTfND<D, S>& tf) {
  return tf.rotation();
}

template <int D, typename S>
RotationND<D, S> rotationOf(const GeneralTf<D, S>& tf) {
  return std::visit([](const auto& t) { return rotationOf(t); }, tf.variant());
}

}  // namespace detail

// transformed(obj, tf) maps a geometric object through a transformation.
// Vectors map as points, compound objects map vertexwise, and transformations
// themselves transform by composition. MatrixND and Quaternion deliberately
// have no overload: they are not spatial objects.

template <int D, typename S, TransformKind<D, S> Tf>
VectorND<D, S> transformed(const VectorND<D, S>& v, const Tf& tf) {
  return tf(v);
}

template <int D, typename S, TransformKind<D, S> Tf>
LineSegmentND<D, S> transformed(const LineSegmentND<D, S>& s, const Tf& tf) {
  return LineSegmentND<D, S>(tf(s.begin()), tf(s.end()));
}

/// Axis-aligned boxes are re-enveloped: the result is the envelope of the
/// transformed corners, since rotation breaks axis alignment.
template <int D, typename S, TransformKind<D, S> Tf>
BoundingBoxND<D, S> transformed(const BoundingBoxND<D, S>& box, const Tf& tf) {
  BoundingBoxND<D, S> out(tf(box.corner(0)), tf(box.corner(0)));
  for (unsigned k = 1; k < (1u << D); ++k) {
    out.extend(tf(box.corner(k)));
  }
  return out;
}

template <typename S, TransformKind<2, S> Tf>
Polygon2D<S> transformed(const Polygon2D<S>& poly, const Tf& tf) {
  std::vector<VectorND<2, S>> vertices;
  vertices.reserve(poly.size());
  for (const auto& v : poly.vertices()) {
    vertices.push_back(tf(v));
  }
  return Polygon2D<S>(std::move(vertices));
}

template <typename S, TransformKind<3, S> Tf>
Polygon3D<S> transformed(const Polygon3D<S>& poly, const Tf& tf) {
  std::vector<VectorND<3, S>> vertices;
  vertices.reserve(poly.size());
  for (const auto& v : poly.vertices()) {
    vertices.push_back(tf(v));
  }
  const VectorND<3, S> normal = detail::rotationOf(tf)(poly.normal());
  const S offset = normal.dot(vertices.front());
  return Polygon3D<S>(std::move(vertices), normal, offset);
}

template <typename S, TransformKind<3, S> Tf>
Frustum3D<S> transformed(const Frustum3D<S>& f, const Tf& tf) {
  const RotationND<3, S> rot = detail::rotationOf(tf);
  std::array<VectorND<3, S>, 4> dirs;
  for (int i = 0; i < 4; ++i) {
    dirs[i] = rot(f.cornerDirections()[i]);
  }
  return Frustum3D<S>(tf(f.apex()), dirs, f.nearDistance(), f.farDistance());
}

template <int D, typename S, TransformKind<D, S> Tf>
auto transformed(const TranslationND<D, S>& obj, const Tf& tf) {
  return compose(tf, obj);
}

template <int D, typename S, TransformKind<D, S> Tf>
auto transformed(const RotationND<D, S>& obj, const Tf& tf) {
  return compose(tf, obj);
}

template <int D, typename S, TransformKind<D, S> Tf>
auto transformed(const RigidTfND<D, S>& obj, const Tf& tf) {
  return compose(tf, obj);
}

/// Whether transformed(Obj, Tf) exists for the pair.
template <typename Obj, typename Tf>
concept Transformable = requires(const Obj& obj, const Tf& tf) {
  transformed(obj, tf);
};

template <typename Obj, typename Tf>
inline constexpr bool is_transformable_v = Transformable<Obj, Tf>;

}  // namespace rtl

#endif  // RTL_TRANSFORM_APPLY_HPP
