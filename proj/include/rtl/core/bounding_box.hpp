// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_CORE_BOUNDING_BOX_HPP
#define RTL_CORE_BOUNDING_BOX_HPP

#include <algorithm>
#include <span>
#include <stdexcept>

#include "rtl/core/vector.hpp"

namespace rtl {

/// Axis-aligned box given by its componentwise extreme corners.
template <int D, typename S = double>
class BoundingBoxND {
public:
  using ElementType = S;
  static constexpr int dimensionality = D;

  BoundingBoxND() = default;

  /// Corners are reordered componentwise, so min()[i] <= max()[i] always holds.
  BoundingBoxND(const VectorND<D, S>& a, const VectorND<D, S>& b) {
    for (int i = 0; i < D; ++i) {
      min_[i] = std::min(a[i], b[i]);
      max_[i] = std::max(a[i], b[i]);
    }
  }

  /// Componentwise envelope of a nonempty point set.
  static BoundingBoxND fromPoints(std::span<const VectorND<D, S>> points) {
    if (points.empty()) {
      throw std::invalid_argument("BoundingBoxND::fromPoints: empty point set");
    }
    BoundingBoxND box(points[0], points[0]);
    for (const auto& p : points.subspan(1)) {
      box.extend(p);
    }
    return box;
  }

  void extend(const VectorND<D, S>& p) {
    for (int i = 0; i < D; ++i) {
      min_[i] = std::min(min_[i], p[i]);
      max_[i] = std::max(max_[i], p[i]);
    }
  }

  const VectorND<D, S>& min() const { return min_; }
  const VectorND<D, S>& max() const { return max_; }

  bool contains(const VectorND<D, S>& p) const {
    for (int i = 0; i < D; ++i) {
      if (p[i] < min_[i] || p[i] > max_[i]) {
        return false;
      }
    }
    return true;
  }

  /// k-th of the 2^D corners, bit i of k selecting min (0) or max (1) in axis i.
  VectorND<D, S> corner(unsigned k) const {
    VectorND<D, S> c;
    for (int i = 0; i < D; ++i) {
      c[i] = ((k >> i) & 1u) != 0 ? max_[i] : min_[i];
    }
    return c;
  }

  /// Length of the min-to-max diagonal; used as the scale of the box.
  S diagonal() const { return distance(min_, max_); }

  bool operator==(const BoundingBoxND& o) const {
    return min_ == o.min_ && max_ == o.max_;
  }
  bool operator!=(const BoundingBoxND& o) const { return !(*this == o); }

private:
  VectorND<D, S> min_;
  VectorND<D, S> max_;
};

using BoundingBox2f = BoundingBoxND<2, float>;
using BoundingBox3f = BoundingBoxND<3, float>;
using BoundingBox2d = BoundingBoxND<2, double>;
using BoundingBox3d = BoundingBoxND<3, double>;

}  // namespace rtl

#endif  // RTL_CORE_BOUNDING_BOX_HPP
