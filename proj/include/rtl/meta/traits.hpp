// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_META_TRAITS_HPP
#define RTL_META_TRAITS_HPP

#include <random>
#include <type_traits>
#include <utility>

#include "rtl/meta/random.hpp"
#include "rtl/transform/apply.hpp"

namespace rtl {

// STL-compatible type traits over the library's objects. All traits are named
// positively: has_metric<T>::value is true iff a distance over T is defined.

template <typename T, typename = void>
struct is_dimensional : std::false_type {};
template <typename T>
struct is_dimensional<T, std::void_t<decltype(T::dimensionality)>> : std::true_type {};
template <typename T>
inline constexpr bool is_dimensional_v = is_dimensional<T>::value;

template <typename T, typename = void>
struct has_element_type : std::false_type {};
template <typename T>
struct has_element_type<T, std::void_t<typename T::ElementType>> : std::true_type {};
template <typename T>
inline constexpr bool has_element_type_v = has_element_type<T>::value;

template <typename T, typename = void>
struct has_metric : std::false_type {};
template <typename T>
struct has_metric<T, std::void_t<decltype(distance(std::declval<const T&>(),
                                                   std::declval<const T&>()))>>
    : std::true_type {};
template <typename T>
inline constexpr bool has_metric_v = has_metric<T>::value;

template <typename T, typename = void>
struct is_invertible : std::false_type {};
template <typename T>
struct is_invertible<T, std::void_t<decltype(std::declval<const T&>().inverted())>>
    : std::true_type {};
template <typename T>
inline constexpr bool is_invertible_v = is_invertible<T>::value;

template <typename T, typename = void>
struct has_identity : std::false_type {};
template <typename T>
struct has_identity<T, std::void_t<decltype(T::identity())>> : std::true_type {};
template <typename T>
inline constexpr bool has_identity_v = has_identity<T>::value;

template <typename T, typename = void>
struct has_nan : std::false_type {};
template <typename T>
struct has_nan<T, std::void_t<decltype(T::nan()),
                              decltype(std::declval<const T&>().hasNaN())>>
    : std::true_type {};
template <typename T>
inline constexpr bool has_nan_v = has_nan<T>::value;

template <typename T, typename = void>
struct has_random : std::false_type {};
template <typename T>
struct has_random<T, std::void_t<decltype(Random<T>::make(
                         std::declval<std::mt19937_64&>(),
                         std::declval<const RandomBounds&>()))>> : std::true_type {};
template <typename T>
inline constexpr bool has_random_v = has_random<T>::value;

/// Transform applicability as a trait: true iff transformed(Obj, Tf) exists.
template <typename Obj, typename Tf>
struct is_applicable : std::bool_constant<is_transformable_v<Obj, Tf>> {};
template <typename Obj, typename Tf>
inline constexpr bool is_applicable_v = is_applicable<Obj, Tf>::value;

}  // namespace rtl

#endif  // RTL_META_TRAITS_HPP
