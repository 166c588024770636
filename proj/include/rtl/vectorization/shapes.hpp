// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_VECTORIZATION_SHAPES_HPP
#define RTL_VECTORIZATION_SHAPES_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtl/core/vector.hpp"

namespace rtl {

/// Synthetic test-cloud generators. Deterministic per seed.
enum class BenchShape { Semicircle, LShape, Square, Helix };

inline std::string shapeName(BenchShape shape) {
  switch (shape) {
    case BenchShape::Semicircle: return "semicircle";
    case BenchShape::LShape: return "l-shape";
    case BenchShape::Square: return "square";
    case BenchShape::Helix: return "helix";
  }
  return "?";
}

inline BenchShape parseShape(const std::string& name) {
  if (name == "semicircle") return BenchShape::Semicircle;
  if (name == "l-shape") return BenchShape::LShape;
  if (name == "square") return BenchShape::Square;
  if (name == "helix") return BenchShape::Helix;
  throw std::invalid_argument("unknown shape '" + name +
                              "', valid: semicircle, l-shape, square, helix");
}

namespace detail {

template <int D, typename S>
void addNoise(std::vector<VectorND<D, S>>& points, S sigma, std::uint64_t seed) {
  if (sigma <= S(0)) {
    return;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<S> gauss(S(0), sigma);
  for (auto& p : points) {
    for (int c = 0; c < D; ++c) {
      p[c] += gauss(rng);
    }
  }
}

}  // namespace detail

namespace detail {

inline void requireShapeSize(std::size_t n, std::size_t minimum, const char* shape) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(shape) + ": needs at least " +
                                std::to_string(minimum) + " points");
  }
}

}  // namespace detail

/// Semicircular arc of radius 10 spanning half a turn.
template <typename S = double>
std::vector<VectorND<2, S>> makeSemicircle(std::size_t n, S noise_sigma,
                                           std::uint64_t seed) {
  detail::requireShapeSize(n, 2, "semicircle");
  std::vector<VectorND<2, S>> points;
  points.reserve(n);
  const S radius = S(10);
  for (std::size_t i = 0; i < n; ++i) {
    const S theta = std::numbers::pi_v<S> * static_cast<S>(i) / static_cast<S>(n - 1);
    points.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
  }
  detail::addNoise(points, noise_sigma, seed);
  return points;
}

/// Right angle: a horizontal arm followed by a vertical arm, both of length 5.
/// With even sampling the corner sits at index n/2 - 1.
template <typename S = double>
std::vector<VectorND<2, S>> makeLShape(std::size_t n, S noise_sigma,
                                       std::uint64_t seed) {
  detail::requireShapeSize(n, 4, "l-shape");
  std::vector<VectorND<2, S>> points;
  points.reserve(n);
  const std::size_t half = n / 2;
  const S arm = S(5);
  for (std::size_t i = 0; i < half; ++i) {
    points.emplace_back(arm * static_cast<S>(i) / static_cast<S>(half - 1), S(0));
  }
  for (std::size_t i = 1; i <= n - half; ++i) {
    points.emplace_back(arm, arm * static_cast<S>(i) / static_cast<S>(n - half));
  }
  detail::addNoise(points, noise_sigma, seed);
  return points;
}

/// Open traversal of a square outline of side 5 starting at the origin.
template <typename S = double>
std::vector<VectorND<2, S>> makeSquare(std::size_t n, S noise_sigma,
                                       std::uint64_t seed) {
  detail::requireShapeSize(n, 4, "square");
  std::vector<VectorND<2, S>> points;
  points.reserve(n);
  const S side = S(5);
  const S perimeter = S(4) * side;
  for (std::size_t i = 0; i < n; ++i) {
    const S s = perimeter * static_cast<S>(i) / static_cast<S>(n);
    const int edge = static_cast<int>(s / side);
    const S t = s - static_cast<S>(edge) * side;
    switch (edge) {
      case 0: points.emplace_back(t, S(0)); break;
      case 1: points.emplace_back(side, t); break;
      case 2: points.emplace_back(side - t, side); break;
      default: points.emplace_back(S(0), side - t); break;
    }
  }
  detail::addNoise(points, noise_sigma, seed);
  return points;
}

/// Helix of three turns climbing in z, with a step change of radius at the
/// start of every turn.
template <typename S = double>
std::vector<VectorND<3, S>> makeHelix(std::size_t n, S noise_sigma,
                                      std::uint64_t seed) {
  detail::requireShapeSize(n, 2, "helix");
  std::vector<VectorND<3, S>> points;
  points.reserve(n);
  constexpr S kTurns = S(3);
  for (std::size_t i = 0; i < n; ++i) {
    const S theta = kTurns * S(2) * std::numbers::pi_v<S> * static_cast<S>(i) /
                    static_cast<S>(n - 1);
    const S radius =
        S(1) + S(0.5) * std::floor(theta / (S(2) * std::numbers::pi_v<S>));
    points.emplace_back(radius * std::cos(theta), radius * std::sin(theta),
                        S(0.3) * theta);
  }
  detail::addNoise(points, noise_sigma, seed);
  return points;
}

/// 2-D shape dispatch; Helix is 3-D and handled separately.
template <typename S = double>
std::vector<VectorND<2, S>> makeShape2(BenchShape shape, std::size_t n,
                                       S noise_sigma, std::uint64_t seed) {
  switch (shape) {
    case BenchShape::Semicircle: return makeSemicircle(n, noise_sigma, seed);
    case BenchShape::LShape: return makeLShape(n, noise_sigma, seed);
    case BenchShape::Square: return makeSquare(n, noise_sigma, seed);
    case BenchShape::Helix:
      throw std::invalid_argument("makeShape2: helix is a 3-D shape");
  }
  throw std::invalid_argument("makeShape2: bad shape");
}

}  // namespace rtl

#endif  // RTL_VECTORIZATION_SHAPES_HPP
