// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_CORE_FRUSTUM_HPP
#define RTL_CORE_FRUSTUM_HPP

#include <array>
#include <stdexcept>

#include "rtl/core/vector.hpp"

namespace rtl {

/// View frustum: apex, four corner-ray directions ordered counter-clockwise
/// as seen from the apex, and near/far clip distances along the rays.
template <typename S = double>
class Frustum3D {
public:
  using ElementType = S;
  static constexpr int dimensionality = 3;

  Frustum3D() = default;

  /// Corner directions are normalized on construction.
  Frustum3D(const VectorND<3, S>& apex,
            const std::array<VectorND<3, S>, 4>& corner_dirs, S near, S far)
      : apex_(apex), near_(near), far_(far) {
    if (!(near > S(0)) || !(far > near)) {
      throw std::invalid_argument("Frustum3D: requires 0 < near < far");
    }
    for (int i = 0; i < 4; ++i) {
      corner_dirs_[i] = corner_dirs[i].normalized();
    }
  }

  const VectorND<3, S>& apex() const { return apex_; }
  const std::array<VectorND<3, S>, 4>& cornerDirections() const { return corner_dirs_; }
  S nearDistance() const { return near_; }
  S farDistance() const { return far_; }

  bool operator==(const Frustum3D& o) const {
    return apex_ == o.apex_ && corner_dirs_ == o.corner_dirs_ &&
           near_ == o.near_ && far_ == o.far_;
  }
  bool operator!=(const Frustum3D& o) const { return !(*this == o); }

private:
  VectorND<3, S> apex_;
  std::array<VectorND<3, S>, 4> corner_dirs_;
  S near_;
  S far_;
};

using Frustum3f = Frustum3D<float>;
using Frustum3d = Frustum3D<double>;

}  // namespace rtl

#endif  // RTL_CORE_FRUSTUM_HPP
