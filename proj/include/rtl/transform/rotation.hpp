// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_TRANSFORM_ROTATION_HPP
#define RTL_TRANSFORM_ROTATION_HPP

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "rtl/core/matrix.hpp"
#include "rtl/core/quaternion.hpp"
#include "rtl/core/vector.hpp"

namespace rtl {

/// Proper rotation in D dimensions, stored as an orthonormal matrix with
/// determinant +1.
///
/// Composition tracks a depth counter; once a composed rotation is 64 products
/// deep it is snapped back to the nearest orthogonal matrix, so orthonormality
/// drift stays bounded under arbitrarily long composition chains.
template <int D, typename S = double>
class RotationND {
public:
  using ElementType = S;
  static constexpr int dimensionality = D;
  static constexpr int kRenormalizationDepth = 64;

  RotationND() = default;

  /// Validates orthonormality (1e-10) and det = +1 (1e-10).
  explicit RotationND(const MatrixND<D, D, S>& m) : matrix_(m) {
    constexpr S kTol = S(1e-10);
    const auto residual = (m.eigen().transpose() * m.eigen() -
                           MatrixND<D, D, S>::EigenType::Identity())
                              .cwiseAbs()
                              .maxCoeff();
    if (residual > kTol || std::abs(m.eigen().determinant() - S(1)) > kTol) {
      throw std::invalid_argument("RotationND: matrix is not a proper rotation");
    }
  }

  /// Planar rotation by angle in radians.
  static RotationND fromAngle(S angle) requires(D == 2) {
    const S c = std::cos(angle);
    const S s = std::sin(angle);
    return RotationND(MatrixND<2, 2, S>{c, -s, s, c}, 0);
  }

  explicit RotationND(const Quaternion<S>& q) requires(D == 3)
      : matrix_(q.rotationMatrix()) {}

  static RotationND identity() {
    return RotationND(MatrixND<D, D, S>::identity(), 0);
  }

  const MatrixND<D, D, S>& matrix() const { return matrix_; }

  Quaternion<S> quaternion() const requires(D == 3) {
    return Quaternion<S>(Eigen::Quaternion<S>(matrix_.eigen()));
  }

  S angle() const requires(D == 2) {
    return std::atan2(matrix_(1, 0), matrix_(0, 0));
  }

  VectorND<D, S> operator()(const VectorND<D, S>& x) const { return matrix_ * x; }

  RotationND inverted() const {
    return RotationND(matrix_.transposed(), depth_);
  }

  RotationND composedWith(const RotationND& inner) const {
    RotationND out(matrix_ * inner.matrix_,
                   std::max(depth_, inner.depth_) + 1);
    if (out.depth_ >= kRenormalizationDepth) {
      out.renormalize();
    }
    return out;
  }

  int compositionDepth() const { return depth_; }

  bool operator==(const RotationND& o) const { return matrix_ == o.matrix_; }
  bool operator!=(const RotationND& o) const { return !(*this == o); }

private:
  // Trusted path for products of already-valid rotations.
  RotationND(const MatrixND<D, D, S>& m, int depth) : matrix_(m), depth_(depth) {}

  /// Nearest orthogonal matrix, polar-decomposition style: R = U V^T.
  void renormalize() {
    Eigen::JacobiSVD<typename MatrixND<D, D, S>::EigenType> svd(
        matrix_.eigen(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    typename MatrixND<D, D, S>::EigenType r =
        svd.matrixU() * svd.matrixV().transpose();
    if (r.determinant() < S(0)) {
      r.col(D - 1) *= S(-1);
    }
    matrix_ = MatrixND<D, D, S>(r);
    depth_ = 0;
  }

  MatrixND<D, D, S> matrix_;
  int depth_ = 0;
};

using Rotation2f = RotationND<2, float>;
using Rotation3f = RotationND<3, float>;
using Rotation2d = RotationND<2, double>;
using Rotation3d = RotationND<3, double>;

}  // namespace rtl

#endif  // RTL_TRANSFORM_ROTATION_HPP
