// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_LATEX_TABLE_HPP
#define RTL_LATEX_TABLE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rtl/latex/style.hpp"

namespace rtl {

/// Rectangular grid of cells with optional fill colors and 90-degree cell
/// rotation, rendered to a LaTeX tabular.
class TableSpec {
public:
  struct Cell {
    std::string text;
    std::optional<Color> fill;
    bool rotate = false;
  };

  void addRow(std::vector<Cell> cells) { rows_.push_back(std::move(cells)); }

  /// Vertical rule(s) after the given column (0-based); count 2 = double rule.
  void setColumnRule(std::size_t after_col, int count = 1) {
    col_rules_[after_col] = count;
  }

  /// Horizontal rule(s) after the given row (0-based).
  void setRowRule(std::size_t after_row, int count = 1) {
    row_rules_[after_row] = count;
  }

  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::map<std::size_t, int>& columnRules() const { return col_rules_; }
  const std::map<std::size_t, int>& rowRules() const { return row_rules_; }

  std::size_t rowCount() const { return rows_.size(); }
  std::size_t columnCount() const { return rows_.empty() ? 0 : rows_.front().size(); }

private:
  std::vector<std::vector<Cell>> rows_;
  std::map<std::size_t, int> col_rules_;
  std::map<std::size_t, int> row_rules_;
};

/// Renders the table to LaTeX source (requires the xcolor/colortbl packages
/// for cell fills). Deterministic; throws on ragged rows.
inline std::string renderTable(const TableSpec& table) {
  if (table.rowCount() == 0) {
    throw std::invalid_argument("renderTable: empty table");
  }
  const std::size_t cols = table.columnCount();
  for (std::size_t r = 0; r < table.rowCount(); ++r) {
    if (table.rows()[r].size() != cols) {
      throw std::invalid_argument("renderTable: ragged row " + std::to_string(r));
    }
  }

  detail::ColorTable colors;
  std::string body;

  std::string colspec;
  for (std::size_t c = 0; c < cols; ++c) {
    colspec += "c";
    const auto it = table.columnRules().find(c);
    if (it != table.columnRules().end()) {
      colspec += std::string(static_cast<std::size_t>(it->second), '|');
    }
  }

  body += "\\begin{tabular}{" + colspec + "}\n";
  for (std::size_t r = 0; r < table.rowCount(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = table.rows()[r][c];
      if (c > 0) {
        body += " & ";
      }
      if (cell.fill) {
        body += "\\cellcolor{" + colors.nameOf(*cell.fill) + "}";
      }
      if (cell.rotate) {
        body += "\\rotatebox[origin=c]{90}{" + cell.text + "}";
      } else {
        body += cell.text;
      }
    }
    body += "\\\\\n";
    const auto it = table.rowRules().find(r);
    if (it != table.rowRules().end()) {
      for (int k = 0; k < it->second; ++k) {
        body += "\\hline\n";
      }
    }
  }
  body += "\\end{tabular}\n";

  // Braces keep the color definitions local to this table.
  return "{\n" + colors.definitions() + body + "}\n";
}

}  // namespace rtl

#endif  // RTL_LATEX_TABLE_HPP
