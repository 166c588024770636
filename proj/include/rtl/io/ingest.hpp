// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_IO_INGEST_HPP
#define RTL_IO_INGEST_HPP

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtl/core/vector.hpp"

namespace rtl {

enum class PointFormat { Csv, PlyAscii };

inline PointFormat parseFormat(const std::string& name) {
  if (name == "csv") return PointFormat::Csv;
  if (name == "ply" || name == "ply-ascii") return PointFormat::PlyAscii;
  throw std::invalid_argument("unknown format '" + name + "', valid: csv, ply-ascii");
}

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool parseDouble(std::string_view field, double& out) {
  // Trim surrounding whitespace; from_chars is locale-independent.
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
    field.remove_prefix(1);
  }
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' ||
                            field.back() == '\r')) {
    field.remove_suffix(1);
  }
  if (field.empty()) {
    return false;
  }
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

inline std::vector<std::string_view> splitFields(const std::string& line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.emplace_back(line.data() + start, line.size() - start);
      break;
    }
    fields.emplace_back(line.data() + start, pos - start);
    start = pos + 1;
  }
  return fields;
}

}  // namespace detail

/// Reads points from CSV with one point per row and exactly D numeric fields.
/// An optional single header row is skipped. Parse failures report the
/// 1-based line number.
template <int D>
std::vector<VectorND<D, double>> readCsvPoints(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IngestError("cannot open " + path.string());
  }

  std::vector<VectorND<D, double>> points;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") {
      continue;
    }
    const auto fields = detail::splitFields(line, ',');

    bool all_numeric = true;
    std::vector<double> values(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      all_numeric = all_numeric && detail::parseDouble(fields[c], values[c]);
    }
    if (!all_numeric && !first_data_seen && line_no == 1) {
      continue;  // header row
    }
    if (!all_numeric || fields.size() != static_cast<std::size_t>(D)) {
      throw IngestError(path.string() + ": line " + std::to_string(line_no) +
                        ": expected " + std::to_string(D) + " numeric fields");
    }
    first_data_seen = true;
    VectorND<D, double> p;
    for (int c = 0; c < D; ++c) {
      p[c] = values[c];
    }
    points.push_back(p);
  }
  return points;
}

/// Reads vertices of an ASCII PLY file; the vertex element must carry x, y
/// and z properties.
inline std::vector<VectorND<3, double>> readPlyPoints(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IngestError("cannot open " + path.string());
  }

  std::string line;
  std::size_t line_no = 0;
  const auto nextLine = [&]() {
    if (!std::getline(in, line)) {
      throw IngestError(path.string() + ": unexpected end of file in header");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
  };

  nextLine();
  if (line != "ply") {
    throw IngestError(path.string() + ": not a PLY file");
  }
  nextLine();
  if (line != "format ascii 1.0") {
    throw IngestError(path.string() + ": only 'format ascii 1.0' is supported");
  }

  std::size_t vertex_count = 0;
  bool in_vertex_element = false;
  bool vertex_seen = false;
  int x_col = -1, y_col = -1, z_col = -1;
  int property_index = 0;

  while (true) {
    nextLine();
    if (line == "end_header") {
      break;
    }
    std::istringstream tokens(line);
    std::string keyword;
    tokens >> keyword;
    if (keyword == "comment") {
      continue;
    }
    if (keyword == "element") {
      std::string name;
      std::size_t count = 0;
      tokens >> name >> count;
      in_vertex_element = name == "vertex";
      if (in_vertex_element) {
        if (vertex_seen) {
          throw IngestError(path.string() + ": multiple vertex elements");
        }
        vertex_seen = true;
        vertex_count = count;
        property_index = 0;
      } else if (!vertex_seen) {
        throw IngestError(path.string() +
                          ": vertex element must come first in the header");
      }
      continue;
    }
    if (keyword == "property" && in_vertex_element) {
      std::string type, name;
      tokens >> type >> name;
      if (type == "list") {
        throw IngestError(path.string() + ": list property in vertex element");
      }
      if (name == "x") x_col = property_index;
      if (name == "y") y_col = property_index;
      if (name == "z") z_col = property_index;
      ++property_index;
    }
  }

  if (!vertex_seen) {
    throw IngestError(path.string() + ": no vertex element");
  }
  if (x_col < 0 || y_col < 0 || z_col < 0) {
    throw IngestError(path.string() + ": vertex element lacks x/y/z properties");
  }

  std::vector<VectorND<3, double>> points;
  points.reserve(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) {
    nextLine();
    const auto fields = detail::splitFields(line, ' ');
    std::vector<double> values;
    for (const auto field : fields) {
      double v;
      if (detail::parseDouble(field, v)) {
        values.push_back(v);
      } else if (!field.empty()) {
        throw IngestError(path.string() + ": line " + std::to_string(line_no) +
                          ": malformed vertex row");
      }
    }
    if (static_cast<int>(values.size()) < property_index) {
      throw IngestError(path.string() + ": line " + std::to_string(line_no) +
                        ": vertex row has too few values");
    }
    points.emplace_back(values[x_col], values[y_col], values[z_col]);
  }
  return points;
}

/// Writes one point per row with round-trip (17 significant digit) precision,
/// so re-ingesting reproduces the points exactly.
template <int D>
void writePointsCsv(const std::filesystem::path& path,
                    const std::vector<VectorND<D, double>>& points) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IngestError("cannot write " + path.string());
  }
  char buf[64];
  for (const auto& p : points) {
    std::string row;
    for (int c = 0; c < D; ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", p[c]);
      if (c > 0) {
        row += ',';
      }
      row += buf;
    }
    row += '\n';
    out << row;
  }
  if (!out.flush()) {
    throw IngestError("write failed for " + path.string());
  }
}

}  // namespace rtl

#endif  // RTL_IO_INGEST_HPP
