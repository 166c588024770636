// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_SEGMENTATION_SEGMENTATION_HPP
#define RTL_SEGMENTATION_SEGMENTATION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rtl/core/vector.hpp"

namespace rtl {

/// Gap criterion parameters: a cluster break occurs where the gap between
/// consecutive points exceeds eps_min plus a range-proportional slack.
struct SegmentationParams {
  double eps_min = 0.0;
  double rel_factor = 0.0;
  std::size_t min_cluster_size = 1;

  void validate() const {
    if (eps_min < 0.0 || rel_factor < 0.0) {
      throw std::invalid_argument("SegmentationParams: thresholds must be nonnegative");
    }
    if (min_cluster_size < 1) {
      throw std::invalid_argument("SegmentationParams: min_cluster_size must be >= 1");
    }
  }
};

/// Maximal run of criterion-continuous consecutive points. Runs smaller than
/// min_cluster_size are kept but flagged as outliers.
template <int D, typename S = double>
struct Cluster {
  std::vector<VectorND<D, S>> points;
  std::size_t first_index = 0;
  std::size_t last_index = 0;
  bool is_outlier = false;

  std::size_t size() const { return points.size(); }
};

/// True when two consecutive points belong to the same cluster:
/// distance(p, q) <= eps_min + rel_factor * min(|p|, |q|).
template <int D, typename S>
bool continuous(const VectorND<D, S>& p, const VectorND<D, S>& q,
                const SegmentationParams& params) {
  const S limit = static_cast<S>(params.eps_min) +
                  static_cast<S>(params.rel_factor) * std::min(p.norm(), q.norm());
  return distance(p, q) <= limit;
}

namespace detail {

template <int D, typename S>
Cluster<D, S> makeCluster(std::span<const VectorND<D, S>> points, std::size_t first,
                          std::size_t last, std::size_t n,
                          const SegmentationParams& params) {
  Cluster<D, S> c;
  c.first_index = first % n;
  c.last_index = last % n;
  c.points.reserve(last - first + 1);
  for (std::size_t i = first; i <= last; ++i) {
    c.points.push_back(points[i % n]);
  }
  c.is_outlier = c.points.size() < params.min_cluster_size;
  return c;
}

}  // namespace detail

/// Partition an ordered scan into continuous clusters. With circular=true the
/// scan is treated as a closed ring of a rotating scanner: when the criterion
/// holds across the wrap, the first and last runs merge into one contiguous
/// cluster (by re-indexing, never by duplicating points).
template <int D, typename S>
std::vector<Cluster<D, S>> segmentScan(std::span<const VectorND<D, S>> points,
                                       const SegmentationParams& params,
                                       bool circular) {
  params.validate();
  std::vector<Cluster<D, S>> clusters;
  const std::size_t n = points.size();
  if (n == 0) {
    return clusters;
  }

  std::size_t start = 0;
  std::size_t end = n;
  if (circular && n > 1 && continuous(points[n - 1], points[0], params)) {
    // Rotate the ring so it opens at a genuine break; if none exists the whole
    // ring is one cluster.
    std::size_t break_at = n;
    for (std::size_t i = 1; i < n; ++i) {
      if (!continuous(points[i - 1], points[i], params)) {
        break_at = i;
        break;
      }
    }
    if (break_at == n) {
      clusters.push_back(detail::makeCluster(points, 0, n - 1, n, params));
      return clusters;
    }
    start = break_at;
    end = break_at + n;
  }

  std::size_t run_begin = start;
  for (std::size_t i = start + 1; i < end; ++i) {
    if (!continuous(points[(i - 1) % n], points[i % n], params)) {
      clusters.push_back(detail::makeCluster(points, run_begin, i - 1, n, params));
      run_begin = i;
    }
  }
  clusters.push_back(detail::makeCluster(points, run_begin, end - 1, n, params));
  return clusters;
}

template <int D, typename S>
std::vector<Cluster<D, S>> segmentScan(const std::vector<VectorND<D, S>>& points,
                                       const SegmentationParams& params,
                                       bool circular) {
  return segmentScan(std::span<const VectorND<D, S>>(points), params, circular);
}

/// Online variant of segmentScan for continual point streams. Shares the gap
/// criterion with the batch variant, so replaying a batch through push() and
/// finish() reproduces segmentScan(circular=false) exactly.
template <int D, typename S = double>
class StreamSegmenter {
public:
  explicit StreamSegmenter(const SegmentationParams& params) : params_(params) {
    params_.validate();
  }

  /// Appends p to the open cluster, or finalizes it and opens a new one when
  /// the criterion breaks. Returns the finalized cluster, if any.
  std::optional<Cluster<D, S>> push(const VectorND<D, S>& p) {
    std::optional<Cluster<D, S>> emitted;
    if (!open_.points.empty() && !continuous(open_.points.back(), p, params_)) {
      emitted = seal();
    }
    if (open_.points.empty()) {
      open_.first_index = next_index_;
    }
    open_.points.push_back(p);
    open_.last_index = next_index_;
    ++next_index_;
    return emitted;
  }

  /// Emits the open cluster if nonempty and fully resets the segmenter.
  std::optional<Cluster<D, S>> finish() {
    std::optional<Cluster<D, S>> emitted;
    if (!open_.points.empty()) {
      emitted = seal();
    }
    next_index_ = 0;
    return emitted;
  }

private:
  Cluster<D, S> seal() {
    open_.is_outlier = open_.points.size() < params_.min_cluster_size;
    Cluster<D, S> out = std::exchange(open_, Cluster<D, S>{});
    return out;
  }

  SegmentationParams params_;
  Cluster<D, S> open_;
  std::size_t next_index_ = 0;
};

}  // namespace rtl

#endif  // RTL_SEGMENTATION_SEGMENTATION_HPP
