// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_VECTORIZATION_FTLS_HPP
#define RTL_VECTORIZATION_FTLS_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rtl/core/line_segment.hpp"
#include "rtl/core/vector.hpp"
#include "rtl/vectorization/prefix_moments.hpp"
#include "rtl/vectorization/tls_fit.hpp"

namespace rtl {

/// Corner sequence of joined TLS segments. fallback[k] marks corners where
/// consecutive lines were too close to parallel to intersect and the shared
/// breakpoint projection was used instead.
template <int D, typename S = double>
struct Polyline {
  std::vector<VectorND<D, S>> corners;
  std::vector<bool> fallback;
};

/// Piecewise-linear approximation of an ordered cluster: interval breakpoints,
/// one TLS fit and clipped segment per interval, and the summed fit error.
template <int D, typename S = double>
struct VectorizationResult {
  std::vector<std::size_t> breakpoints;  // first = 0, last = n-1
  std::vector<LineSegmentND<D, S>> segments;
  std::vector<LineFit<D, S>> fits;
  bool shared_breakpoints = true;
  S total_sse = S(0);
  std::optional<Polyline<D, S>> polyline;

  /// First point index of segment k's interval.
  std::size_t intervalBegin(std::size_t k) const {
    if (k == 0 || shared_breakpoints) {
      return breakpoints[k];
    }
    return breakpoints[k] + 1;
  }

  /// Last point index of segment k's interval.
  std::size_t intervalEnd(std::size_t k) const { return breakpoints[k + 1]; }
};

namespace detail {

template <int D, typename S>
VectorND<D, S> projectOntoLine(const VectorND<D, S>& p, const VectorND<D, S>& c,
                               const VectorND<D, S>& dir) {
  return c + dir * (p - c).dot(dir);
}

template <int D, typename S>
LineFit<D, S> singletonFit(const VectorND<D, S>& p) {
  LineFit<D, S> fit;
  fit.centroid = p;
  if constexpr (D == 2) {
    fit.direction = VectorND<2, S>(S(1), S(0));
  } else {
    fit.direction = VectorND<3, S>(S(0), S(0), S(1));
  }
  fit.sse = S(0);
  fit.count = 1;
  return fit;
}

/// Fits and clipped segments for a given breakpoint layout.
template <int D, typename S>
void rebuildSegments(std::span<const VectorND<D, S>> points,
                     const PrefixMoments<D, S>& pm,
                     VectorizationResult<D, S>& result) {
  result.segments.clear();
  result.fits.clear();
  result.total_sse = S(0);
  const std::size_t m = result.breakpoints.size() - 1;
  result.segments.reserve(m);
  result.fits.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t a = result.intervalBegin(k);
    const std::size_t b = result.intervalEnd(k);
    const LineFit<D, S> fit =
        a == b ? singletonFit(points[a]) : tlsLineFit(pm, a, b);
    result.segments.emplace_back(
        projectOntoLine(points[a], fit.centroid, fit.direction),
        projectOntoLine(points[b], fit.centroid, fit.direction));
    result.total_sse += fit.sse;
    result.fits.push_back(fit);
  }
}

}  // namespace detail

/// Fast total-least-squares vectorization of an ordered point sequence.
///
/// A window grows point by point while the RMS orthogonal deviation of its TLS
/// line stays within sigma_max; the first violation closes the interval at the
/// previous point. With shared_breakpoints the closing point also starts the
/// next interval, so consecutive segments meet; otherwise intervals are
/// disjoint (which can leave a final single-point interval, emitted as a
/// zero-length segment with zero error).
///
/// Construction is O(n): one prefix-moment pass plus an O(1) fit per window
/// test.
template <int D, typename S>
VectorizationResult<D, S> ftlsExtract(std::span<const VectorND<D, S>> points,
                                      S sigma_max, bool shared_breakpoints) {
  if (!(sigma_max > S(0))) {
    throw std::invalid_argument("ftlsExtract: sigma_max must be positive");
  }
  if (points.size() < 2) {
    throw std::invalid_argument("ftlsExtract: need at least 2 points");
  }

  const PrefixMoments<D, S> pm(points);
  const std::size_t n = points.size();

  VectorizationResult<D, S> result;
  result.shared_breakpoints = shared_breakpoints;
  result.breakpoints.push_back(0);

  std::size_t a = 0;
  std::size_t b = 1;
  while (b < n) {
    if (tlsLineFit(pm, a, b).rms() <= sigma_max) {
      ++b;
      continue;
    }
    result.breakpoints.push_back(b - 1);
    a = shared_breakpoints ? b - 1 : b;
    b = a + 1;
  }
  result.breakpoints.push_back(n - 1);

  detail::rebuildSegments(points, pm, result);
  return result;
}

template <int D, typename S>
VectorizationResult<D, S> ftlsExtract(const std::vector<VectorND<D, S>>& points,
                                      S sigma_max, bool shared_breakpoints) {
  return ftlsExtract(std::span<const VectorND<D, S>>(points), sigma_max,
                     shared_breakpoints);
}

/// Local refinement of breakpoint positions: sweeps interior breakpoints left
/// to right, sliding each by +-1 while the summed fit error strictly
/// decreases, until a full sweep makes no move or max_iter sweeps elapse.
/// The breakpoint count is preserved and the returned total_sse never exceeds
/// the input's.
template <int D, typename S>
VectorizationResult<D, S> globalOptimize(std::span<const VectorND<D, S>> points,
                                         const PrefixMoments<D, S>& pm,
                                         VectorizationResult<D, S> result,
                                         std::size_t max_iter) {
  if (pm.size() != points.size()) {
    throw std::invalid_argument("globalOptimize: moments size mismatch");
  }
  const std::size_t m = result.breakpoints.size();
  if (m < 3) {
    detail::rebuildSegments(points, pm, result);
    result.polyline.reset();
    return result;
  }

  auto& bp = result.breakpoints;
  const auto intervalSse = [&](std::size_t begin, std::size_t end) {
    return begin == end ? S(0) : tlsLineFit(pm, begin, end).sse;
  };
  const auto beginOf = [&](std::size_t k, std::size_t bp_k) {
    return (k == 0 || result.shared_breakpoints) ? bp_k : bp_k + 1;
  };

  for (std::size_t sweep = 0; sweep < max_iter; ++sweep) {
    bool moved = false;
    for (std::size_t k = 1; k + 1 < m; ++k) {
      while (true) {
        const std::size_t cur = bp[k];
        S cur_cost = intervalSse(beginOf(k - 1, bp[k - 1]), cur) +
                     intervalSse(beginOf(k, cur), bp[k + 1]);
        std::size_t best = cur;
        S best_cost = cur_cost;
        for (const long step : {-1L, 1L}) {
          const long cand_signed = static_cast<long>(cur) + step;
          const std::size_t cand = static_cast<std::size_t>(cand_signed);
          // Both touched intervals must keep at least two points; only the
          // disjoint-interval layout may leave its final interval degenerate.
          const bool final_may_degenerate =
              k + 2 == m && !result.shared_breakpoints;
          if (cand_signed <= 0 || cand <= beginOf(k - 1, bp[k - 1]) ||
              beginOf(k, cand) + (final_may_degenerate ? 0 : 1) > bp[k + 1]) {
            continue;
          }
          const S cost = intervalSse(beginOf(k - 1, bp[k - 1]), cand) +
                         intervalSse(beginOf(k, cand), bp[k + 1]);
          if (cost < best_cost) {
            best_cost = cost;
            best = cand;
          }
        }
        if (best == cur) {
          break;
        }
        bp[k] = best;
        moved = true;
      }
    }
    if (!moved) {
      break;
    }
  }

  detail::rebuildSegments(points, pm, result);
  result.polyline.reset();
  return result;
}

template <int D, typename S>
VectorizationResult<D, S> globalOptimize(const std::vector<VectorND<D, S>>& points,
                                         const PrefixMoments<D, S>& pm,
                                         VectorizationResult<D, S> result,
                                         std::size_t max_iter) {
  return globalOptimize(std::span<const VectorND<D, S>>(points), pm,
                        std::move(result), max_iter);
}

/// Joins shared-breakpoint segments into a polyline: interior corners are the
/// intersections of consecutive fitted lines (closest-approach midpoints in
/// 3-D); end corners are the clipped segment ends. Near-parallel neighbours
/// (angle below 1e-6 rad) fall back to the shared breakpoint projection and
/// are flagged.
template <int D, typename S>
Polyline<D, S> polylineConstruct(const VectorizationResult<D, S>& result) {
  if (!result.shared_breakpoints) {
    throw std::invalid_argument(
        "polylineConstruct: requires shared-breakpoint vectorization");
  }
  if (result.segments.empty()) {
    throw std::invalid_argument("polylineConstruct: empty result");
  }

  constexpr S kParallelSin = S(1e-6);
  Polyline<D, S> poly;
  const std::size_t m = result.segments.size();
  poly.corners.reserve(m + 1);
  poly.fallback.assign(m + 1, false);

  poly.corners.push_back(result.segments.front().begin());
  for (std::size_t k = 1; k < m; ++k) {
    const auto& f1 = result.fits[k - 1];
    const auto& f2 = result.fits[k];
    bool parallel;
    if constexpr (D == 2) {
      const S cross = f1.direction.x() * f2.direction.y() -
                      f1.direction.y() * f2.direction.x();
      parallel = std::abs(cross) < kParallelSin;
      if (!parallel) {
        const VectorND<2, S> rhs = f2.centroid - f1.centroid;
        const S t =
            (rhs.x() * f2.direction.y() - rhs.y() * f2.direction.x()) / cross;
        poly.corners.push_back(f1.centroid + f1.direction * t);
      }
    } else {
      const VectorND<3, S> cross = f1.direction.cross(f2.direction);
      parallel = cross.norm() < kParallelSin;
      if (!parallel) {
        const VectorND<3, S> w = f1.centroid - f2.centroid;
        const S b = f1.direction.dot(f2.direction);
        const S d = f1.direction.dot(w);
        const S e = f2.direction.dot(w);
        const S denom = S(1) - b * b;
        const S t = (b * e - d) / denom;
        const S u = (e - b * d) / denom;
        poly.corners.push_back(((f1.centroid + f1.direction * t) +
                                (f2.centroid + f2.direction * u)) /
                               S(2));
      }
    }
    if (parallel) {
      poly.corners.push_back(
          (result.segments[k - 1].end() + result.segments[k].begin()) / S(2));
      poly.fallback[k] = true;
    }
  }
  poly.corners.push_back(result.segments.back().end());
  return poly;
}

}  // namespace rtl

#endif  // RTL_VECTORIZATION_FTLS_HPP
