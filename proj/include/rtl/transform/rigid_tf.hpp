// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_TRANSFORM_RIGID_TF_HPP
#define RTL_TRANSFORM_RIGID_TF_HPP

#include "rtl/transform/rotation.hpp"
#include "rtl/transform/translation.hpp"

namespace rtl {

/// Rigid transformation x -> R*x + t.
template <int D, typename S = double>
class RigidTfND {
public:
  using ElementType = S;
  static constexpr int dimensionality = D;

  RigidTfND() = default;
  RigidTfND(const RotationND<D, S>& rotation, const VectorND<D, S>& translation)
      : rotation_(rotation), translation_(translation) {}
  RigidTfND(const RotationND<D, S>& rotation, const TranslationND<D, S>& translation)
      : rotation_(rotation), translation_(translation.offset()) {}

  static RigidTfND identity() {
    return RigidTfND(RotationND<D, S>::identity(), VectorND<D, S>::zeros());
  }

  const RotationND<D, S>& rotation() const { return rotation_; }
  const VectorND<D, S>& translation() const { return translation_; }

  VectorND<D, S> operator()(const VectorND<D, S>& x) const {
    return rotation_(x) + translation_;
  }

  RigidTfND inverted() const {
    const RotationND<D, S> rinv = rotation_.inverted();
    return RigidTfND(rinv, -rinv(translation_));
  }

  bool operator==(const RigidTfND& o) const {
    return rotation_ == o.rotation_ && translation_ == o.translation_;
  }
  bool operator!=(const RigidTfND& o) const { return !(*this == o); }

private:
  RotationND<D, S> rotation_;
  VectorND<D, S> translation_;
};

using RigidTf2f = RigidTfND<2, float>;
using RigidTf3f = RigidTfND<3, float>;
using RigidTf2d = RigidTfND<2, double>;
using RigidTf3d = RigidTfND<3, double>;

}  // namespace rtl

#endif  // RTL_TRANSFORM_RIGID_TF_HPP
