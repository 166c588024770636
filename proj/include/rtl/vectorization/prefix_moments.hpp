// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_VECTORIZATION_PREFIX_MOMENTS_HPP
#define RTL_VECTORIZATION_PREFIX_MOMENTS_HPP

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "rtl/core/vector.hpp"

namespace rtl {

/// Cumulative first and second moments of an ordered point sequence, making
/// the centroid and central scatter matrix of any contiguous interval an O(1)
/// query after O(n) construction.
///
/// Points are shifted by their global centroid before accumulation and the
/// running sums are kept in extended precision, which keeps interval central
/// moments accurate even for short intervals far from the origin.
template <int D, typename S = double>
class PrefixMoments {
  static_assert(D == 2 || D == 3, "PrefixMoments supports 2-D and 3-D data");

public:
  using ElementType = S;
  static constexpr int dimensionality = D;
  static constexpr int kPairCount = D * (D + 1) / 2;

  /// Index of the (a, b) component pair, a <= b, in the moment arrays.
  static constexpr int pairIndex(int a, int b) {
    return a * D - a * (a - 1) / 2 + (b - a);
  }

  /// Centroid and central second moments of a closed interval [i, j].
  struct Interval {
    std::size_t count;
    VectorND<D, S> centroid;
    std::array<S, kPairCount> central;

    S moment(int a, int b) const {
      return a <= b ? central[pairIndex(a, b)] : central[pairIndex(b, a)];
    }

    Eigen::Matrix<S, D, D> scatter() const {
      Eigen::Matrix<S, D, D> m;
      for (int a = 0; a < D; ++a) {
        for (int b = a; b < D; ++b) {
          m(a, b) = m(b, a) = central[pairIndex(a, b)];
        }
      }
      return m;
    }
  };

  explicit PrefixMoments(std::span<const VectorND<D, S>> points)
      : n_(points.size()) {
    if (n_ == 0) {
      throw std::invalid_argument("PrefixMoments: empty point sequence");
    }

    std::array<Accum, D> mean{};
    for (const auto& p : points) {
      for (int c = 0; c < D; ++c) {
        mean[c] += static_cast<Accum>(p[c]);
      }
    }
    for (int c = 0; c < D; ++c) {
      mean[c] /= static_cast<Accum>(n_);
      shift_[c] = static_cast<S>(mean[c]);
    }

    for (int c = 0; c < D; ++c) {
      sum1_[c].assign(n_ + 1, Accum(0));
    }
    for (int k = 0; k < kPairCount; ++k) {
      sum2_[k].assign(n_ + 1, Accum(0));
    }
    for (std::size_t i = 0; i < n_; ++i) {
      std::array<Accum, D> d;
      for (int c = 0; c < D; ++c) {
        d[c] = static_cast<Accum>(points[i][c]) - mean[c];
        sum1_[c][i + 1] = sum1_[c][i] + d[c];
      }
      for (int a = 0; a < D; ++a) {
        for (int b = a; b < D; ++b) {
          const int k = pairIndex(a, b);
          sum2_[k][i + 1] = sum2_[k][i] + d[a] * d[b];
        }
      }
    }
  }

  explicit PrefixMoments(const std::vector<VectorND<D, S>>& points)
      : PrefixMoments(std::span<const VectorND<D, S>>(points)) {}

  std::size_t size() const { return n_; }

  Interval interval(std::size_t i, std::size_t j) const {
    if (i > j || j >= n_) {
      throw std::out_of_range("PrefixMoments::interval: bad index range");
    }
    Interval out;
    out.count = j - i + 1;
    const Accum m = static_cast<Accum>(out.count);

    std::array<Accum, D> s1;
    for (int c = 0; c < D; ++c) {
      s1[c] = sum1_[c][j + 1] - sum1_[c][i];
      out.centroid[c] = shift_[c] + static_cast<S>(s1[c] / m);
    }
    for (int a = 0; a < D; ++a) {
      for (int b = a; b < D; ++b) {
        const int k = pairIndex(a, b);
        const Accum s2 = sum2_[k][j + 1] - sum2_[k][i];
        out.central[k] = static_cast<S>(s2 - s1[a] * s1[b] / m);
      }
    }
    return out;
  }

private:
  using Accum = long double;

  std::size_t n_;
  VectorND<D, S> shift_;
  std::array<std::vector<Accum>, D> sum1_;
  std::array<std::vector<Accum>, kPairCount> sum2_;
};

}  // namespace rtl

#endif  // RTL_VECTORIZATION_PREFIX_MOMENTS_HPP
