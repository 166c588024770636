// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_CORE_VECTOR_HPP
#define RTL_CORE_VECTOR_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Core>

namespace rtl {

/// Column vector in D-dimensional Euclidean space.
///
/// Default construction performs no initialization; never read a
/// default-constructed value before assigning it.
template <int D, typename S = double>
class VectorND {
  static_assert(D >= 1, "VectorND requires a positive dimension");
  static_assert(std::is_floating_point_v<S>);

public:
  using ElementType = S;
  using EigenType = Eigen::Matrix<S, D, 1>;
  static constexpr int dimensionality = D;

  VectorND() = default;
  explicit VectorND(const EigenType& data) : data_(data) {}

  VectorND(S x, S y) requires(D == 2) : data_(x, y) {}
  VectorND(S x, S y, S z) requires(D == 3) : data_(x, y, z) {}

  static VectorND zeros() { return VectorND(EigenType::Zero()); }
  static VectorND ones() { return VectorND(EigenType::Ones()); }

  /// NaN-filled sentinel, detectable through hasNaN().
  static VectorND nan() {
    return VectorND(EigenType::Constant(std::numeric_limits<S>::quiet_NaN()));
  }

  S operator[](int i) const { return data_[i]; }
  S& operator[](int i) { return data_[i]; }

  S x() const requires(D >= 1) { return data_[0]; }
  S y() const requires(D >= 2) { return data_[1]; }
  S z() const requires(D >= 3) { return data_[2]; }

  const EigenType& eigen() const { return data_; }
  EigenType& eigen() { return data_; }
  const S* data() const { return data_.data(); }

  bool hasNaN() const { return data_.hasNaN(); }

  S norm() const { return data_.norm(); }
  S squaredNorm() const { return data_.squaredNorm(); }

  S dot(const VectorND& other) const { return data_.dot(other.data_); }

  VectorND cross(const VectorND& other) const requires(D == 3) {
    return VectorND(EigenType(data_.cross(other.data_)));
  }

  VectorND normalized() const {
    const S n = norm();
    if (n == S(0)) {
      throw std::domain_error("VectorND::normalized: zero vector");
    }
    return VectorND(EigenType(data_ / n));
  }

  VectorND operator+(const VectorND& o) const { return VectorND(EigenType(data_ + o.data_)); }
  VectorND operator-(const VectorND& o) const { return VectorND(EigenType(data_ - o.data_)); }
  VectorND operator-() const { return VectorND(EigenType(-data_)); }
  VectorND operator*(S s) const { return VectorND(EigenType(data_ * s)); }
  VectorND operator/(S s) const { return VectorND(EigenType(data_ / s)); }

  VectorND& operator+=(const VectorND& o) { data_ += o.data_; return *this; }
  VectorND& operator-=(const VectorND& o) { data_ -= o.data_; return *this; }
  VectorND& operator*=(S s) { data_ *= s; return *this; }
  VectorND& operator/=(S s) { data_ /= s; return *this; }

  bool operator==(const VectorND& o) const { return data_ == o.data_; }
  bool operator!=(const VectorND& o) const { return !(*this == o); }

private:
  EigenType data_;
};

template <int D, typename S>
VectorND<D, S> operator*(S s, const VectorND<D, S>& v) {
  return v * s;
}

/// Euclidean distance between two points of the same dimension.
template <int D, typename S>
S distance(const VectorND<D, S>& a, const VectorND<D, S>& b) {
  return (a - b).norm();
}

using Vector2f = VectorND<2, float>;
using Vector3f = VectorND<3, float>;
using Vector2d = VectorND<2, double>;
using Vector3d = VectorND<3, double>;

}  // namespace rtl

#endif  // RTL_CORE_VECTOR_HPP
