// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_CORE_MATRIX_HPP
#define RTL_CORE_MATRIX_HPP

#include <initializer_list>
#include <limits>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/LU>

#include "rtl/core/vector.hpp"

namespace rtl {

/// Dense row-major real matrix with compile-time shape.
///
/// Default construction performs no initialization.
template <int R, int C, typename S = double>
class MatrixND {
  static_assert(R >= 1 && C >= 1, "MatrixND requires positive shape");
  static_assert(std::is_floating_point_v<S>);

public:
  using ElementType = S;
  using EigenType = Eigen::Matrix<S, R, C>;
  static constexpr int rowDimension = R;
  static constexpr int colDimension = C;

  MatrixND() = default;
  explicit MatrixND(const EigenType& data) : data_(data) {}

  /// Row-major element list; must supply exactly R*C values.
  MatrixND(std::initializer_list<S> elems) {
    if (static_cast<int>(elems.size()) != R * C) {
      throw std::invalid_argument("MatrixND: element list size mismatch");
    }
    int k = 0;
    for (S e : elems) {
      data_(k / C, k % C) = e;
      ++k;
    }
  }

  static MatrixND zeros() { return MatrixND(EigenType::Zero()); }
  static MatrixND identity() requires(R == C) { return MatrixND(EigenType::Identity()); }
  static MatrixND nan() {
    return MatrixND(EigenType::Constant(std::numeric_limits<S>::quiet_NaN()));
  }

  S operator()(int r, int c) const { return data_(r, c); }
  S& operator()(int r, int c) { return data_(r, c); }

  const EigenType& eigen() const { return data_; }
  EigenType& eigen() { return data_; }

  bool hasNaN() const { return data_.hasNaN(); }

  MatrixND<C, R, S> transposed() const {
    return MatrixND<C, R, S>(typename MatrixND<C, R, S>::EigenType(data_.transpose()));
  }

  S determinant() const requires(R == C) { return data_.determinant(); }

  /// Inverse of a square nonsingular matrix; throws std::domain_error otherwise.
  MatrixND inverted() const requires(R == C) {
    Eigen::FullPivLU<EigenType> lu(data_);
    if (!lu.isInvertible()) {
      throw std::domain_error("MatrixND::inverted: singular matrix");
    }
    return MatrixND(EigenType(lu.inverse()));
  }

  MatrixND operator+(const MatrixND& o) const { return MatrixND(EigenType(data_ + o.data_)); }
  MatrixND operator-(const MatrixND& o) const { return MatrixND(EigenType(data_ - o.data_)); }
  MatrixND operator*(S s) const { return MatrixND(EigenType(data_ * s)); }

  template <int C2>
  MatrixND<R, C2, S> operator*(const MatrixND<C, C2, S>& o) const {
    return MatrixND<R, C2, S>(
        typename MatrixND<R, C2, S>::EigenType(data_ * o.eigen()));
  }

  VectorND<R, S> operator*(const VectorND<C, S>& v) const {
    return VectorND<R, S>(typename VectorND<R, S>::EigenType(data_ * v.eigen()));
  }

  bool operator==(const MatrixND& o) const { return data_ == o.data_; }
  bool operator!=(const MatrixND& o) const { return !(*this == o); }

private:
  EigenType data_;
};

/// Frobenius distance between equally shaped matrices.
template <int R, int C, typename S>
S distance(const MatrixND<R, C, S>& a, const MatrixND<R, C, S>& b) {
  return (a.eigen() - b.eigen()).norm();
}

using Matrix2f = MatrixND<2, 2, float>;
using Matrix3f = MatrixND<3, 3, float>;
using Matrix2d = MatrixND<2, 2, double>;
using Matrix3d = MatrixND<3, 3, double>;

}  // namespace rtl

#endif  // RTL_CORE_MATRIX_HPP
