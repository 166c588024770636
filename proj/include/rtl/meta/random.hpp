// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_META_RANDOM_HPP
#define RTL_META_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/QR>

#include "rtl/core/line_segment.hpp"
#include "rtl/core/matrix.hpp"
#include "rtl/core/quaternion.hpp"
#include "rtl/core/vector.hpp"
#include "rtl/transform/rigid_tf.hpp"
#include "rtl/transform/rotation.hpp"
#include "rtl/transform/translation.hpp"

namespace rtl {

/// Elementwise range for randomly generated coordinates.
struct RandomBounds {
  double min = -1.0;
  double max = 1.0;

  void validate() const {
    if (!std::isfinite(min) || !std::isfinite(max) || !(min <= max)) {
      throw std::invalid_argument("RandomBounds: requires finite min <= max");
    }
  }
};

/// Deterministic random construction of library objects; specialized for
/// every type whose has_random trait holds. Rotations come out orthonormal
/// and quaternions unit-norm regardless of bounds.
template <typename T>
struct Random;

template <int D, typename S>
struct Random<VectorND<D, S>> {
  static VectorND<D, S> make(std::mt19937_64& rng, const RandomBounds& bounds) {
    bounds.validate();
    std::uniform_real_distribution<S> uniform(static_cast<S>(bounds.min),
                                              static_cast<S>(bounds.max));
    VectorND<D, S> v;
    for (int c = 0; c < D; ++c) {
      v[c] = uniform(rng);
    }
    return v;
  }
};

template <int R, int C, typename S>
struct Random<MatrixND<R, C, S>> {
  static MatrixND<R, C, S> make(std::mt19937_64& rng, const RandomBounds& bounds) {
    bounds.validate();
    std::uniform_real_distribution<S> uniform(static_cast<S>(bounds.min),
                                              static_cast<S>(bounds.max));
    MatrixND<R, C, S> m;
    for (int r = 0; r < R; ++r) {
      for (int c = 0; c < C; ++c) {
        m(r, c) = uniform(rng);
      }
    }
    return m;
  }
};

template <typename S>
struct Random<Quaternion<S>> {
  /// Uniform rotation quaternion (Shoemake's subgroup method).
  static Quaternion<S> make(std::mt19937_64& rng, const RandomBounds& bounds) {
    bounds.validate();
    std::uniform_real_distribution<S> unit(S(0), S(1));
    const S u1 = unit(rng);
    const S u2 = unit(rng);
    const S u3 = unit(rng);
    constexpr S kTwoPi = S(2) * std::numbers::pi_v<S>;
    const S a = std::sqrt(S(1) - u1);
    const S b = std::sqrt(u1);
    return Quaternion<S>(a * std::sin(kTwoPi * u2), a * std::cos(kTwoPi * u2),
                         b * std::sin(kTwoPi * u3), b * std::cos(kTwoPi * u3));
  }
};

template <int D, typename S>
struct Random<LineSegmentND<D, S>> {
  static LineSegmentND<D, S> make(std::mt19937_64& rng, const RandomBounds& bounds) {
    const auto begin = Random<VectorND<D, S>>::make(rng, bounds);
    return LineSegmentND<D, S>(begin, Random<VectorND<D, S>>::make(rng, bounds));
  }
};

template <int D, typename S>
struct Random<TranslationND<D, S>> {
  static TranslationND<D, S> make(std::mt19937_64& rng, const RandomBounds& bounds) {
    return TranslationND<D, S>(Random<VectorND<D, S>>::make(rng, bounds));
  }
};

template <int D, typename S>
struct Random<RotationND<D, S>> {
  static RotationND<D, S> make(std::mt19937_64& rng, const RandomBounds& bounds) {
    bounds.validate();
    if constexpr (D == 2) {
      std::uniform_real_distribution<S> angle(S(0), S(2) * std::numbers::pi_v<S>);
      return RotationND<2, S>::fromAngle(angle(rng));
    } else if constexpr (D == 3) {
      return RotationND<3, S>(Random<Quaternion<S>>::make(rng, bounds));
    } else {
      // QR of a Gaussian matrix yields a uniformly distributed orthogonal
      // factor; the sign fixes make it a proper rotation.
      std::normal_distribution<S> gauss(S(0), S(1));
      Eigen::Matrix<S, D, D> g;
      for (int r = 0; r < D; ++r) {
        for (int c = 0; c < D; ++c) {
          g(r, c) = gauss(rng);
        }
      }
      Eigen::HouseholderQR<Eigen::Matrix<S, D, D>> qr(g);
      Eigen::Matrix<S, D, D> q = qr.householderQ();
      const Eigen::Matrix<S, D, D> r = qr.matrixQR().template triangularView<Eigen::Upper>();
      for (int c = 0; c < D; ++c) {
        if (r(c, c) < S(0)) {
          q.col(c) *= S(-1);
        }
      }
      if (q.determinant() < S(0)) {
        q.col(0) *= S(-1);
      }
      return RotationND<D, S>(MatrixND<D, D, S>(q));
    }
  }
};

template <int D, typename S>
struct Random<RigidTfND<D, S>> {
  static RigidTfND<D, S> make(std::mt19937_64& rng, const RandomBounds& bounds) {
    const auto rotation = Random<RotationND<D, S>>::make(rng, bounds);
    return RigidTfND<D, S>(rotation, Random<VectorND<D, S>>::make(rng, bounds));
  }
};

}  // namespace rtl

#endif  // RTL_META_RANDOM_HPP
