// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_CORE_LINE_SEGMENT_HPP
#define RTL_CORE_LINE_SEGMENT_HPP

#include <algorithm>
#include <stdexcept>

#include "rtl/core/vector.hpp"

namespace rtl {

/// Segment between two points. Zero-length segments are representable, but
/// direction() on them is an error.
template <int D, typename S = double>
class LineSegmentND {
public:
  using ElementType = S;
  static constexpr int dimensionality = D;

  LineSegmentND() = default;
  LineSegmentND(const VectorND<D, S>& begin, const VectorND<D, S>& end)
      : begin_(begin), end_(end) {}

  const VectorND<D, S>& begin() const { return begin_; }
  const VectorND<D, S>& end() const { return end_; }

  S length() const { return distance(begin_, end_); }

  /// Unit direction from begin to end; throws on a degenerate segment.
  VectorND<D, S> direction() const {
    if (begin_ == end_) {
      throw std::domain_error("LineSegmentND::direction: zero-length segment");
    }
    return (end_ - begin_).normalized();
  }

  bool operator==(const LineSegmentND& o) const {
    return begin_ == o.begin_ && end_ == o.end_;
  }
  bool operator!=(const LineSegmentND& o) const { return !(*this == o); }

private:
  VectorND<D, S> begin_;
  VectorND<D, S> end_;
};

/// Distance from a point to the closest point of a segment (clamped
/// projection). A degenerate segment degrades to point distance.
template <int D, typename S>
S distance(const VectorND<D, S>& p, const LineSegmentND<D, S>& s) {
  const VectorND<D, S> d = s.end() - s.begin();
  const S len2 = d.squaredNorm();
  if (len2 == S(0)) {
    return distance(p, s.begin());
  }
  const S t = std::clamp((p - s.begin()).dot(d) / len2, S(0), S(1));
  return distance(p, s.begin() + d * t);
}

template <int D, typename S>
S distance(const LineSegmentND<D, S>& s, const VectorND<D, S>& p) {
  return distance(p, s);
}

/// Minimal distance between two segments, via constrained minimization of the
/// squared distance over both segment parameters.
template <int D, typename S>
S distance(const LineSegmentND<D, S>& a, const LineSegmentND<D, S>& b) {
  const VectorND<D, S> da = a.end() - a.begin();
  const VectorND<D, S> db = b.end() - b.begin();
  const VectorND<D, S> r = a.begin() - b.begin();
  const S aa = da.squaredNorm();
  const S bb = db.squaredNorm();
  if (aa == S(0)) {
    return distance(a.begin(), b);
  }
  if (bb == S(0)) {
    return distance(b.begin(), a);
  }
  const S ab = da.dot(db);
  const S ar = da.dot(r);
  const S br = db.dot(r);
  const S det = aa * bb - ab * ab;

  // Unconstrained closest parameters of the supporting lines, then clamp and
  // re-solve each parameter against the other held fixed.
  S t = S(0);
  if (det > S(0)) {
    t = std::clamp((ab * br - bb * ar) / det, S(0), S(1));
  }
  S u = std::clamp((ab * t + br) / bb, S(0), S(1));
  t = std::clamp((ab * u - ar) / aa, S(0), S(1));

  return distance(a.begin() + da * t, b.begin() + db * u);
}

using LineSegment2f = LineSegmentND<2, float>;
using LineSegment3f = LineSegmentND<3, float>;
using LineSegment2d = LineSegmentND<2, double>;
using LineSegment3d = LineSegmentND<3, double>;

}  // namespace rtl

#endif  // RTL_CORE_LINE_SEGMENT_HPP
