// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_TRANSFORM_GENERAL_TF_HPP
#define RTL_TRANSFORM_GENERAL_TF_HPP

#include <type_traits>
#include <variant>

#include "rtl/transform/rigid_tf.hpp"
#include "rtl/transform/rotation.hpp"
#include "rtl/transform/translation.hpp"

namespace rtl {

// compose(a, b) is the transform equivalent to applying b first, then a.
// Same-kind compositions keep their kind; mixed ones promote to RigidTfND.

template <int D, typename S>
TranslationND<D, S> compose(const TranslationND<D, S>& a, const TranslationND<D, S>& b) {
  return TranslationND<D, S>(a.offset() + b.offset());
}

template <int D, typename S>
RotationND<D, S> compose(const RotationND<D, S>& a, const RotationND<D, S>& b) {
  return a.composedWith(b);
}

template <int D, typename S>
RigidTfND<D, S> compose(const RigidTfND<D, S>& a, const RigidTfND<D, S>& b) {
  return RigidTfND<D, S>(a.rotation().composedWith(b.rotation()),
                         a.rotation()(b.translation()) + a.translation());
}

template <int D, typename S>
RigidTfND<D, S> compose(const TranslationND<D, S>& a, const RotationND<D, S>& b) {
  return RigidTfND<D, S>(b, a.offset());
}

template <int D, typename S>
RigidTfND<D, S> compose(const RotationND<D, S>& a, const TranslationND<D, S>& b) {
  return RigidTfND<D, S>(a, a(b.offset()));
}

template <int D, typename S>
RigidTfND<D, S> compose(const TranslationND<D, S>& a, const RigidTfND<D, S>& b) {
  return RigidTfND<D, S>(b.rotation(), b.translation() + a.offset());
}

template <int D, typename S>
RigidTfND<D, S> compose(const RigidTfND<D, S>& a, const TranslationND<D, S>& b) {
  return RigidTfND<D, S>(a.rotation(), a.rotation()(b.offset()) + a.translation());
}

template <int D, typename S>
RigidTfND<D, S> compose(const RotationND<D, S>& a, const RigidTfND<D, S>& b) {
  return RigidTfND<D, S>(a.composedWith(b.rotation()), a(b.translation()));
}

template <int D, typename S>
RigidTfND<D, S> compose(const RigidTfND<D, S>& a, const RotationND<D, S>& b) {
  return RigidTfND<D, S>(a.rotation().composedWith(b), a.translation());
}

/// Tagged union over the supported transformation kinds, so heterogeneous
/// transforms can share containers, chains and trees.
template <int D, typename S = double>
class GeneralTf {
public:
  using ElementType = S;
  static constexpr int dimensionality = D;
  using Variant = std::variant<TranslationND<D, S>, RotationND<D, S>, RigidTfND<D, S>>;

  GeneralTf() : tf_(TranslationND<D, S>::identity()) {}
  GeneralTf(const TranslationND<D, S>& tf) : tf_(tf) {}
  GeneralTf(const RotationND<D, S>& tf) : tf_(tf) {}
  GeneralTf(const RigidTfND<D, S>& tf) : tf_(tf) {}

  static GeneralTf identity() { return GeneralTf(TranslationND<D, S>::identity()); }

  template <typename T>
  bool holds() const { return std::holds_alternative<T>(tf_); }

  template <typename T>
  const T& get() const { return std::get<T>(tf_); }

  const Variant& variant() const { return tf_; }

  VectorND<D, S> operator()(const VectorND<D, S>& x) const {
    return std::visit([&](const auto& tf) { return tf(x); }, tf_);
  }

  GeneralTf inverted() const {
    return std::visit([](const auto& tf) { return GeneralTf(tf.inverted()); }, tf_);
  }

  /// Stored alternative widened to an equivalent rigid transformation.
  RigidTfND<D, S> asRigid() const {
    return std::visit(
        [](const auto& tf) {
          using T = std::decay_t<decltype(tf)>;
          if constexpr (std::is_same_v<T, TranslationND<D, S>>) {
            return RigidTfND<D, S>(RotationND<D, S>::identity(), tf.offset());
          } else if constexpr (std::is_same_v<T, RotationND<D, S>>) {
            return RigidTfND<D, S>(tf, VectorND<D, S>::zeros());
          } else {
            return tf;
          }
        },
        tf_);
  }

private:
  Variant tf_;
};

template <int D, typename S>
GeneralTf<D, S> compose(const GeneralTf<D, S>& a, const GeneralTf<D, S>& b) {
  return std::visit(
      [](const auto& ta, const auto& tb) { return GeneralTf<D, S>(compose(ta, tb)); },
      a.variant(), b.variant());
}

template <typename Tf, int D, typename S>
inline constexpr bool is_transform_kind_v =
    std::is_same_v<Tf, TranslationND<D, S>> || std::is_same_v<Tf, RotationND<D, S>> ||
    std::is_same_v<Tf, RigidTfND<D, S>> || std::is_same_v<Tf, GeneralTf<D, S>>;

template <typename Tf, int D, typename S>
concept TransformKind = is_transform_kind_v<Tf, D, S>;

template <int D, typename S, typename T>
  requires(is_transform_kind_v<T, D, S> && !std::is_same_v<T, GeneralTf<D, S>>)
GeneralTf<D, S> compose(const GeneralTf<D, S>& a, const T& b) {
  return compose(a, GeneralTf<D, S>(b));
}

template <int D, typename S, typename T>
  requires(is_transform_kind_v<T, D, S> && !std::is_same_v<T, GeneralTf<D, S>>)
GeneralTf<D, S> compose(const T& a, const GeneralTf<D, S>& b) {
  return compose(GeneralTf<D, S>(a), b);
}

using GeneralTf2d = GeneralTf<2, double>;
using GeneralTf3d = GeneralTf<3, double>;

}  // namespace rtl

#endif  // RTL_TRANSFORM_GENERAL_TF_HPP
