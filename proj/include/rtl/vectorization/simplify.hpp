// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_VECTORIZATION_SIMPLIFY_HPP
#define RTL_VECTORIZATION_SIMPLIFY_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rtl/core/line_segment.hpp"
#include "rtl/core/vector.hpp"

namespace rtl {

namespace detail {

template <int D, typename S>
void validateSimplifyArgs(std::span<const VectorND<D, S>> points, S tol) {
  if (points.size() < 2) {
    throw std::invalid_argument("simplify: need at least 2 points");
  }
  if (!(tol > S(0))) {
    throw std::invalid_argument("simplify: tolerance must be positive");
  }
}

/// Orthogonal distance from p to the infinite line through c with unit
/// direction dir.
template <int D, typename S>
S pointLineDistance(const VectorND<D, S>& p, const VectorND<D, S>& c,
                    const VectorND<D, S>& dir) {
  const VectorND<D, S> v = p - c;
  return (v - dir * v.dot(dir)).norm();
}

}  // namespace detail

/// Douglas-Peucker point elimination: keeps the endpoints and recursively
/// splits at the point of maximum distance from the current chord while that
/// distance exceeds tol. Every input point ends up within tol of the returned
/// polyline.
template <int D, typename S>
std::vector<std::size_t> douglasPeucker(std::span<const VectorND<D, S>> points, S tol) {
  detail::validateSimplifyArgs(points, tol);
  const std::size_t n = points.size();
  std::vector<bool> keep(n, false);
  keep.front() = keep.back() = true;

  std::vector<std::pair<std::size_t, std::size_t>> stack;
  stack.emplace_back(0, n - 1);
  while (!stack.empty()) {
    const auto [first, last] = stack.back();
    stack.pop_back();
    if (last - first < 2) {
      continue;
    }
    const LineSegmentND<D, S> chord(points[first], points[last]);
    S max_dist = S(0);
    std::size_t arg = first;
    for (std::size_t i = first + 1; i < last; ++i) {
      const S d = distance(points[i], chord);
      if (d > max_dist) {
        max_dist = d;
        arg = i;
      }
    }
    if (max_dist > tol) {
      keep[arg] = true;
      stack.emplace_back(first, arg);
      stack.emplace_back(arg, last);
    }
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) {
      out.push_back(i);
    }
  }
  return out;
}

template <int D, typename S>
std::vector<std::size_t> douglasPeucker(const std::vector<VectorND<D, S>>& points, S tol) {
  return douglasPeucker(std::span<const VectorND<D, S>>(points), tol);
}

/// Reumann-Witkam corridor walk: a strip of half-width tol is anchored along
/// the line through the current key point and its successor; the first point
/// leaving the strip becomes the next key. Single pass, endpoints always kept.
template <int D, typename S>
std::vector<std::size_t> reumannWitkam(std::span<const VectorND<D, S>> points, S tol) {
  detail::validateSimplifyArgs(points, tol);
  const std::size_t n = points.size();
  std::vector<std::size_t> out{0};

  std::size_t key = 0;
  while (key + 1 < n) {
    std::size_t succ = key + 1;
    while (succ < n && points[succ] == points[key]) {
      ++succ;
    }
    if (succ == n) {
      break;  // tail duplicates the key point
    }
    const VectorND<D, S> dir = (points[succ] - points[key]).normalized();
    std::size_t j = succ + 1;
    while (j < n && detail::pointLineDistance(points[j], points[key], dir) <= tol) {
      ++j;
    }
    if (j == n) {
      break;
    }
    out.push_back(j);
    key = j;
  }

  if (out.back() != n - 1) {
    out.push_back(n - 1);
  }
  return out;
}

template <int D, typename S>
std::vector<std::size_t> reumannWitkam(const std::vector<VectorND<D, S>>& points, S tol) {
  return reumannWitkam(std::span<const VectorND<D, S>>(points), tol);
}

}  // namespace rtl

#endif  // RTL_VECTORIZATION_SIMPLIFY_HPP
