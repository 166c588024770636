// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_LATEX_DOCUMENT_HPP
#define RTL_LATEX_DOCUMENT_HPP

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rtl/latex/figure2d.hpp"
#include "rtl/latex/scene3d.hpp"
#include "rtl/latex/table.hpp"

namespace rtl {

/// Multi-figure LaTeX document: figures, scenes and tables with captions,
/// aggregated into one compilable source file.
class TexDocument {
public:
  struct Item {
    std::variant<Figure2D, Scene3D, TableSpec> content;
    std::string caption;
  };

  void addFigure(Figure2D figure, std::string caption = {}) {
    items_.push_back({std::move(figure), std::move(caption)});
  }
  void addScene(Scene3D scene, std::string caption = {}) {
    items_.push_back({std::move(scene), std::move(caption)});
  }
  void addTable(TableSpec table, std::string caption = {}) {
    items_.push_back({std::move(table), std::move(caption)});
  }

  /// Extra preamble lines appended after the default packages.
  void addPreamble(std::string line) { preamble_.push_back(std::move(line)); }

  bool empty() const { return items_.empty(); }
  const std::vector<Item>& items() const { return items_; }

  /// Full .tex source; float environments appear in insertion order.
  std::string render() const {
    std::string out;
    out += "\\documentclass{article}\n";
    out += "\\usepackage{tikz}\n";
    out += "\\usepackage[table]{xcolor}\n";
    out += "\\usepackage{graphicx}\n";
    for (const auto& line : preamble_) {
      out += line + "\n";
    }
    out += "\\begin{document}\n";
    for (const auto& item : items_) {
      const bool is_table = std::holds_alternative<TableSpec>(item.content);
      const std::string env = is_table ? "table" : "figure";
      out += "\\begin{" + env + "}[htbp]\n\\centering\n";
      out += std::visit(
          [](const auto& content) {
            using T = std::decay_t<decltype(content)>;
            if constexpr (std::is_same_v<T, Figure2D>) {
              return renderFigure(content);
            } else if constexpr (std::is_same_v<T, Scene3D>) {
              return renderScene(content);
            } else {
              return renderTable(content);
            }
          },
          item.content);
      if (!item.caption.empty()) {
        out += "\\caption{" + item.caption + "}\n";
      }
      out += "\\end{" + env + "}\n";
    }
    out += "\\end{document}\n";
    return out;
  }

private:
  std::vector<Item> items_;
  std::vector<std::string> preamble_;
};

/// Writes the document to `path`; the document must be non-empty.
inline void exportDocument(const TexDocument& doc, const std::filesystem::path& path) {
  if (doc.empty()) {
    throw std::invalid_argument("exportDocument: document is empty");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("exportDocument: cannot write " + path.string());
  }
  out << doc.render();
  if (!out.flush()) {
    throw std::runtime_error("exportDocument: write failed for " + path.string());
  }
}

/// Outcome of an external LaTeX compilation attempt.
struct CompileStatus {
  bool ok = false;
  bool skipped = false;
  std::string reason;
  int exit_code = 0;
  std::string log_tail;
};

/// Compiler executable resolution: explicit value, then the RTL_LATEX_CMD
/// environment variable, then "pdflatex".
inline std::string resolveLatexCommand(const std::string& explicit_cmd = {}) {
  if (!explicit_cmd.empty()) {
    return explicit_cmd;
  }
  if (const char* env = std::getenv("RTL_LATEX_CMD"); env != nullptr && *env != '\0') {
    return env;
  }
  return "pdflatex";
}

namespace detail {

inline bool executableAvailable(const std::string& cmd) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (cmd.find('/') != std::string::npos) {
    return fs::exists(cmd, ec) && !fs::is_directory(cmd, ec);
  }
  const char* path_env = std::getenv("PATH");
  if (path_env == nullptr) {
    return false;
  }
  std::stringstream paths(path_env);
  std::string dir;
  while (std::getline(paths, dir, ':')) {
    if (!dir.empty() && fs::exists(fs::path(dir) / cmd, ec)) {
      return true;
    }
  }
  return false;
}

inline std::string shellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

}  // namespace detail

/// Compiles a previously exported .tex file by shelling out to the configured
/// LaTeX tool. A missing tool yields a skipped status, never a crash; a
/// nonzero exit attaches the tail of the compiler log.
inline CompileStatus compileDocument(const std::filesystem::path& tex_path,
                                     const std::string& latex_cmd = {}) {
  CompileStatus status;
  const std::string cmd = resolveLatexCommand(latex_cmd);

  if (!detail::executableAvailable(cmd)) {
    status.skipped = true;
    status.reason = "skipped: compiler not found: " + cmd;
    return status;
  }

  const std::filesystem::path dir =
      tex_path.has_parent_path() ? tex_path.parent_path() : std::filesystem::path(".");
  const std::string shell_cmd =
      "cd " + detail::shellQuote(dir.string()) + " && " + detail::shellQuote(cmd) +
      " -interaction=nonstopmode -halt-on-error " +
      detail::shellQuote(tex_path.filename().string()) + " 2>&1";

  std::string log;
  FILE* pipe = popen(shell_cmd.c_str(), "r");
  if (pipe == nullptr) {
    status.reason = "failed to launch compiler";
    status.exit_code = -1;
    return status;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    log.append(buf, got);
  }
  const int wait_status = pclose(pipe);

  constexpr std::size_t kTail = 2000;
  status.log_tail = log.size() > kTail ? log.substr(log.size() - kTail) : log;
  status.exit_code = wait_status != -1 && WIFEXITED(wait_status)
                         ? WEXITSTATUS(wait_status)
                         : wait_status;
  status.ok = status.exit_code == 0;
  if (!status.ok) {
    status.reason = "compiler exited with status " + std::to_string(status.exit_code);
  }
  return status;
}

}  // namespace rtl

#endif  // RTL_LATEX_DOCUMENT_HPP
