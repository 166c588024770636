// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_META_REGISTRY_HPP
#define RTL_META_REGISTRY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rtl/core/bounding_box.hpp"
#include "rtl/core/frustum.hpp"
#include "rtl/core/polygon.hpp"
#include "rtl/latex/table.hpp"
#include "rtl/meta/traits.hpp"

namespace rtl {

struct CapabilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One registry row: trait flags and transform applicability of a library
/// type, plus a human-readable description for logging and error reporting.
struct CapabilityRecord {
  std::string type_name;
  bool is_dimensional = false;
  bool has_element_type = false;
  bool has_metric = false;
  bool is_invertible = false;
  bool has_identity = false;
  bool has_nan = false;
  bool has_random = false;
  bool applicable_translation = false;
  bool applicable_rotation = false;
  bool applicable_rigid_tf = false;
  std::string description;
};

namespace detail {

template <typename T, int D>
CapabilityRecord makeRecord(std::string name, std::string description) {
  CapabilityRecord rec;
  rec.type_name = std::move(name);
  rec.is_dimensional = is_dimensional_v<T>;
  rec.has_element_type = has_element_type_v<T>;
  rec.has_metric = has_metric_v<T>;
  rec.is_invertible = is_invertible_v<T>;
  rec.has_identity = has_identity_v<T>;
  rec.has_nan = has_nan_v<T>;
  rec.has_random = has_random_v<T>;
  rec.applicable_translation = is_applicable_v<T, TranslationND<D, double>>;
  rec.applicable_rotation = is_applicable_v<T, RotationND<D, double>>;
  rec.applicable_rigid_tf = is_applicable_v<T, RigidTfND<D, double>>;
  rec.description = std::move(description);
  return rec;
}

}  // namespace detail

/// Trait table over the library's template objects, instantiated at their
/// canonical dimensions. The flags are derived from the traits themselves, so
/// the registry cannot drift from actual type behavior.
inline const std::vector<CapabilityRecord>& capabilityRegistry() {
  static const std::vector<CapabilityRecord> registry = {
      detail::makeRecord<VectorND<3, double>, 3>(
          "VectorND", "N-dimensional Euclidean vector"),
      detail::makeRecord<LineSegmentND<3, double>, 3>(
          "LineSegmentND", "line segment between two points"),
      detail::makeRecord<BoundingBoxND<3, double>, 3>(
          "BoundingBoxND", "axis-aligned bounding box"),
      detail::makeRecord<Polygon2D<double>, 2>(
          "Polygon2D", "closed polygon in the plane"),
      detail::makeRecord<Polygon3D<double>, 3>(
          "Polygon3D", "closed planar polygon in space"),
      detail::makeRecord<Frustum3D<double>, 3>(
          "Frustum3D", "view frustum with apex and corner rays"),
      detail::makeRecord<TranslationND<3, double>, 3>(
          "TranslationND", "translation by an offset vector"),
      detail::makeRecord<RotationND<3, double>, 3>(
          "RotationND", "proper rotation (orthonormal matrix)"),
      detail::makeRecord<RigidTfND<3, double>, 3>(
          "RigidTfND", "rigid transformation (rotation and translation)"),
      detail::makeRecord<MatrixND<3, 3, double>, 3>(
          "MatrixND", "dense real matrix"),
      detail::makeRecord<Quaternion<double>, 3>(
          "Quaternion", "Hamilton quaternion"),
  };
  return registry;
}

namespace detail {

inline std::string knownTypeNames() {
  std::string names;
  for (const auto& rec : capabilityRegistry()) {
    if (!names.empty()) {
      names += ", ";
    }
    names += rec.type_name;
  }
  return names;
}

inline const CapabilityRecord& findRecord(const std::string& type_name) {
  for (const auto& rec : capabilityRegistry()) {
    if (rec.type_name == type_name) {
      return rec;
    }
  }
  throw CapabilityError("unknown type '" + type_name +
                        "', known: " + knownTypeNames());
}

}  // namespace detail

inline constexpr const char* kCapabilityFlags[] = {
    "is_dimensional", "has_element_type", "has_metric", "is_invertible",
    "has_identity",   "has_nan",          "has_random", "Translation",
    "Rotation",       "RigidTf"};

/// Registry lookup by type name and flag name; unknown keys raise a
/// CapabilityError listing the valid ones.
inline bool capability(const std::string& type_name, const std::string& flag) {
  const CapabilityRecord& rec = detail::findRecord(type_name);
  if (flag == "is_dimensional") return rec.is_dimensional;
  if (flag == "has_element_type") return rec.has_element_type;
  if (flag == "has_metric") return rec.has_metric;
  if (flag == "is_invertible") return rec.is_invertible;
  if (flag == "has_identity") return rec.has_identity;
  if (flag == "has_nan") return rec.has_nan;
  if (flag == "has_random") return rec.has_random;
  if (flag == "Translation") return rec.applicable_translation;
  if (flag == "Rotation") return rec.applicable_rotation;
  if (flag == "RigidTf") return rec.applicable_rigid_tf;
  std::string flags;
  for (const char* f : kCapabilityFlags) {
    if (!flags.empty()) {
      flags += ", ";
    }
    flags += f;
  }
  throw CapabilityError("unknown flag '" + flag + "', known: " + flags);
}

/// Any library object constructible by name through randomObject().
using MetaObject =
    std::variant<VectorND<3, double>, LineSegmentND<3, double>,
                 TranslationND<3, double>, RotationND<3, double>,
                 RigidTfND<3, double>, MatrixND<3, 3, double>, Quaternion<double>>;

/// Random instance of a registered type (canonical 3-D instantiation).
/// Deterministic per (seed, bounds). Types without the has_random capability
/// are rejected.
inline MetaObject randomObject(const std::string& type_name, std::uint64_t seed,
                               const RandomBounds& bounds) {
  const CapabilityRecord& rec = detail::findRecord(type_name);
  if (!rec.has_random) {
    throw CapabilityError("type '" + type_name + "' has no random generator");
  }
  std::mt19937_64 rng(seed);
  if (type_name == "VectorND") {
    return Random<VectorND<3, double>>::make(rng, bounds);
  }
  if (type_name == "LineSegmentND") {
    return Random<LineSegmentND<3, double>>::make(rng, bounds);
  }
  if (type_name == "TranslationND") {
    return Random<TranslationND<3, double>>::make(rng, bounds);
  }
  if (type_name == "RotationND") {
    return Random<RotationND<3, double>>::make(rng, bounds);
  }
  if (type_name == "RigidTfND") {
    return Random<RigidTfND<3, double>>::make(rng, bounds);
  }
  if (type_name == "MatrixND") {
    return Random<MatrixND<3, 3, double>>::make(rng, bounds);
  }
  return Random<Quaternion<double>>::make(rng, bounds);
}

/// Renders the registry as its reference table: one row per type, trait flags
/// left of the name, transform applicability right of it, green cells for
/// true and red cells for false.
inline TableSpec capabilityTable() {
  const Color green{0.4, 1.0, 0.4};
  const Color red{1.0, 0.4, 0.4};

  TableSpec table;
  std::vector<TableSpec::Cell> header;
  for (const char* flag : {"is_dimensional", "has_element_type", "has_metric",
                           "is_invertible", "has_identity", "has_nan",
                           "has_random"}) {
    header.push_back({std::string("\\texttt{") + flag + "}", std::nullopt, true});
  }
  header.push_back({"Examined templates", std::nullopt, false});
  for (const char* flag : {"Translation", "Rotation", "RigidTf"}) {
    header.push_back({std::string("\\texttt{") + flag + "}", std::nullopt, true});
  }
  table.addRow(std::move(header));
  table.setRowRule(0, 2);
  table.setColumnRule(6);
  table.setColumnRule(7, 2);

  std::size_t row_index = 0;
  const auto& registry = capabilityRegistry();
  for (const auto& rec : registry) {
    const auto cell = [&](bool value) {
      return TableSpec::Cell{"", value ? green : red, false};
    };
    table.addRow({cell(rec.is_dimensional), cell(rec.has_element_type),
                  cell(rec.has_metric), cell(rec.is_invertible),
                  cell(rec.has_identity), cell(rec.has_nan), cell(rec.has_random),
                  {"\\texttt{" + rec.type_name + "}", std::nullopt, false},
                  cell(rec.applicable_translation), cell(rec.applicable_rotation),
                  cell(rec.applicable_rigid_tf)});
    ++row_index;
    if (row_index < registry.size()) {
      table.setRowRule(row_index);
    }
  }
  return table;
}

}  // namespace rtl

#endif  // RTL_META_REGISTRY_HPP
