// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_CORE_QUATERNION_HPP
#define RTL_CORE_QUATERNION_HPP

#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

#include "rtl/core/matrix.hpp"
#include "rtl/core/vector.hpp"

namespace rtl {

/// Hamilton quaternion. Unit quaternions represent 3-D rotations.
///
/// Default construction performs no initialization.
template <typename S = double>
class Quaternion {
  static_assert(std::is_floating_point_v<S>);

public:
  using ElementType = S;
  using EigenType = Eigen::Quaternion<S>;

  Quaternion() = default;
  Quaternion(S w, S x, S y, S z) : data_(w, x, y, z) {}
  explicit Quaternion(const EigenType& data) : data_(data) {}

  /// Rotation about a unit axis by angle in radians.
  Quaternion(S angle, const VectorND<3, S>& axis)
      : data_(Eigen::AngleAxis<S>(angle, axis.normalized().eigen())) {}

  static Quaternion identity() { return Quaternion(S(1), S(0), S(0), S(0)); }

  S w() const { return data_.w(); }
  S x() const { return data_.x(); }
  S y() const { return data_.y(); }
  S z() const { return data_.z(); }

  const EigenType& eigen() const { return data_; }

  S norm() const { return data_.norm(); }

  Quaternion normalized() const {
    const S n = norm();
    if (n == S(0)) {
      throw std::domain_error("Quaternion::normalized: zero quaternion");
    }
    return Quaternion(w() / n, x() / n, y() / n, z() / n);
  }

  Quaternion conjugated() const { return Quaternion(data_.conjugate()); }

  Quaternion inverted() const {
    const S n2 = data_.squaredNorm();
    if (n2 == S(0)) {
      throw std::domain_error("Quaternion::inverted: zero quaternion");
    }
    return Quaternion(w() / n2, -x() / n2, -y() / n2, -z() / n2);
  }

  /// Hamilton product.
  Quaternion operator*(const Quaternion& o) const { return Quaternion(EigenType(data_ * o.data_)); }

  /// Rotate a vector. A non-unit quaternion is normalized first; the optional
  /// flag reports whether normalization was needed.
  VectorND<3, S> rotated(const VectorND<3, S>& v, bool* renormalized = nullptr) const {
    constexpr S kUnitTol = S(1e-12);
    EigenType q = data_;
    const bool off_unit = std::abs(data_.squaredNorm() - S(1)) > kUnitTol;
    if (off_unit) {
      q.normalize();
    }
    if (renormalized != nullptr) {
      *renormalized = off_unit;
    }
    return VectorND<3, S>(typename VectorND<3, S>::EigenType(q * v.eigen()));
  }

  /// Equivalent rotation matrix of the normalized quaternion.
  MatrixND<3, 3, S> rotationMatrix() const {
    EigenType q = data_;
    q.normalize();
    return MatrixND<3, 3, S>(typename MatrixND<3, 3, S>::EigenType(q.toRotationMatrix()));
  }

  bool operator==(const Quaternion& o) const {
    return w() == o.w() && x() == o.x() && y() == o.y() && z() == o.z();
  }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }

private:
  EigenType data_;
};

/// Euclidean distance of quaternion coefficients.
template <typename S>
S distance(const Quaternion<S>& a, const Quaternion<S>& b) {
  return (a.eigen().coeffs() - b.eigen().coeffs()).norm();
}

using Quaternionf = Quaternion<float>;
using Quaterniond = Quaternion<double>;

}  // namespace rtl

#endif  // RTL_CORE_QUATERNION_HPP
