// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_TRANSFORM_TRANSLATION_HPP
#define RTL_TRANSFORM_TRANSLATION_HPP

#include "rtl/core/vector.hpp"

namespace rtl {

/// Translation by a fixed offset.
template <int D, typename S = double>
class TranslationND {
public:
  using ElementType = S;
  static constexpr int dimensionality = D;

  TranslationND() = default;
  explicit TranslationND(const VectorND<D, S>& offset) : offset_(offset) {}
  TranslationND(S x, S y) requires(D == 2) : offset_(x, y) {}
  TranslationND(S x, S y, S z) requires(D == 3) : offset_(x, y, z) {}

  static TranslationND identity() { return TranslationND(VectorND<D, S>::zeros()); }

  const VectorND<D, S>& offset() const { return offset_; }

  VectorND<D, S> operator()(const VectorND<D, S>& x) const { return x + offset_; }

  TranslationND inverted() const { return TranslationND(-offset_); }

  bool operator==(const TranslationND& o) const { return offset_ == o.offset_; }
  bool operator!=(const TranslationND& o) const { return !(*this == o); }

private:
  VectorND<D, S> offset_;
};

/// Metric induced by the offset vectors.
template <int D, typename S>
S distance(const TranslationND<D, S>& a, const TranslationND<D, S>& b) {
  return distance(a.offset(), b.offset());
}

using Translation2f = TranslationND<2, float>;
using Translation3f = TranslationND<3, float>;
using Translation2d = TranslationND<2, double>;
using Translation3d = TranslationND<3, double>;

}  // namespace rtl

#endif  // RTL_TRANSFORM_TRANSLATION_HPP
