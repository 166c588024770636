// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_VECTORIZATION_TLS_FIT_HPP
#define RTL_VECTORIZATION_TLS_FIT_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "rtl/core/vector.hpp"
#include "rtl/vectorization/prefix_moments.hpp"
#include "rtl/vectorization/sym_eigen.hpp"

namespace rtl {

/// Total-least-squares line: passes through `centroid` along unit `direction`;
/// sse is the sum of squared orthogonal point distances.
template <int D, typename S = double>
struct LineFit {
  VectorND<D, S> centroid;
  VectorND<D, S> direction;
  S sse;
  std::size_t count;

  S rms() const { return std::sqrt(sse / static_cast<S>(count)); }
};

/// Total-least-squares plane through `centroid` with unit `normal`; sse is the
/// sum of squared point-to-plane distances.
template <typename S = double>
struct PlaneFit {
  VectorND<3, S> centroid;
  VectorND<3, S> normal;
  S sse;
  std::size_t count;

  S rms() const { return std::sqrt(sse / static_cast<S>(count)); }
};

namespace detail {

/// Resolves eigenvector sign ambiguity: the component of largest magnitude is
/// made positive (first such component on ties).
template <int D, typename S>
VectorND<D, S> normalizeSign(VectorND<D, S> v) {
  int arg = 0;
  for (int c = 1; c < D; ++c) {
    if (std::abs(v[c]) > std::abs(v[arg])) {
      arg = c;
    }
  }
  if (v[arg] < S(0)) {
    v = -v;
  }
  return v;
}

template <typename S>
bool isotropic3(const SymEigen3<S>& e) {
  const S scale = std::max({std::abs(e.values[0]), std::abs(e.values[2]), S(1e-300)});
  return e.values[0] - e.values[2] <= S(1e-14) * scale;
}

}  // namespace detail

/// TLS line fit of the closed interval [i, j] in O(1) via prefix moments.
/// Needs at least two points.
template <int D, typename S>
LineFit<D, S> tlsLineFit(const PrefixMoments<D, S>& pm, std::size_t i, std::size_t j) {
  if (j < i + 1 || j >= pm.size()) {
    throw std::invalid_argument("tlsLineFit: interval must hold at least 2 points");
  }
  const auto iv = pm.interval(i, j);
  LineFit<D, S> fit;
  fit.centroid = iv.centroid;
  fit.count = iv.count;

  if (iv.count == 2) {
    // A two-point line is exact; bypassing the eigen solve keeps sse at a
    // hard zero, so minimal windows always pass any positive threshold.
    const auto e = solveSym2(iv.moment(0, 0), iv.moment(0, 1), iv.moment(1, 1));
    VectorND<D, S> dir;
    if constexpr (D == 2) {
      dir = VectorND<2, S>(e.vectors[0][0], e.vectors[0][1]);
    } else {
      const auto e3 = solveSym3(iv.scatter());
      dir = detail::isotropic3(e3)
                ? VectorND<3, S>(S(0), S(0), S(1))
                : VectorND<3, S>(e3.vectors(0, 0), e3.vectors(1, 0),
                                 e3.vectors(2, 0));
    }
    fit.direction = detail::normalizeSign(dir);
    fit.sse = S(0);
    return fit;
  }

  if constexpr (D == 2) {
    const auto e = solveSym2(iv.moment(0, 0), iv.moment(0, 1), iv.moment(1, 1));
    fit.direction = detail::normalizeSign(
        VectorND<2, S>(e.vectors[0][0], e.vectors[0][1]));
    fit.sse = std::max(e.values[1], S(0));
  } else {
    const auto e = solveSym3(iv.scatter());
    if (detail::isotropic3(e)) {
      fit.direction = VectorND<3, S>(S(0), S(0), S(1));
    } else {
      fit.direction = detail::normalizeSign(VectorND<3, S>(
          e.vectors(0, 0), e.vectors(1, 0), e.vectors(2, 0)));
    }
    fit.sse = std::max(e.values[1] + e.values[2], S(0));
  }
  return fit;
}

/// TLS plane fit of the closed interval [i, j]; 3-D only, needs at least
/// three points.
template <typename S>
PlaneFit<S> tlsPlaneFit(const PrefixMoments<3, S>& pm, std::size_t i, std::size_t j) {
  if (j < i + 2 || j >= pm.size()) {
    throw std::invalid_argument("tlsPlaneFit: interval must hold at least 3 points");
  }
  const auto iv = pm.interval(i, j);
  const auto e = solveSym3(iv.scatter());

  PlaneFit<S> fit;
  fit.centroid = iv.centroid;
  fit.count = iv.count;
  if (detail::isotropic3(e)) {
    fit.normal = VectorND<3, S>(S(0), S(0), S(1));
  } else {
    fit.normal = detail::normalizeSign(VectorND<3, S>(
        e.vectors(0, 2), e.vectors(1, 2), e.vectors(2, 2)));
  }
  fit.sse = std::max(e.values[2], S(0));
  return fit;
}

}  // namespace rtl

#endif  // RTL_VECTORIZATION_TLS_FIT_HPP
