#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rtl/latex/document.hpp"
#include "rtl/latex/figure2d.hpp"
#include "rtl/latex/scene3d.hpp"
#include "rtl/latex/style.hpp"
#include "rtl/latex/table.hpp"
#include "rtl/meta/registry.hpp"

using namespace rtl;

namespace {

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path goldenDir() { return RTL_TEST_GOLDEN_DIR; }

std::size_t countOccurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

Figure2D unitSquareFigure() {
  Figure2D fig;
  Style style;
  style.line_width = 0.8;
  fig.addPolygon({Vector2d(0, 0), Vector2d(1, 0), Vector2d(1, 1), Vector2d(0, 1)},
                 style);
  return fig;
}

Scene3D cubeScene() {
  Scene3D scene;
  Style red_face;
  red_face.color = {0.8, 0.2, 0.2};
  red_face.line_width = 0.8;
  Style blue_face;
  blue_face.color = {0.2, 0.3, 0.8};
  blue_face.line_width = 0.8;
  Style pillar;
  pillar.line_width = 0.4;
  scene.addPolygon({Vector3d(-1, -1, 3), Vector3d(1, -1, 3), Vector3d(1, 1, 3),
                    Vector3d(-1, 1, 3)},
                   blue_face);
  scene.addPolygon({Vector3d(-1, -1, 2), Vector3d(1, -1, 2), Vector3d(1, 1, 2),
                    Vector3d(-1, 1, 2)},
                   red_face);
  for (int k = 0; k < 4; ++k) {
    const double sx = k == 1 || k == 2 ? 1.0 : -1.0;
    const double sy = k >= 2 ? 1.0 : -1.0;
    scene.addSegment(LineSegment3d(Vector3d(sx, sy, 2), Vector3d(sx, sy, 3)), pillar);
  }
  scene.setProjection({Projection::Kind::Pinhole, 2.0});
  scene.setScale(20.0);
  return scene;
}

TableSpec smallTable() {
  TableSpec table;
  table.addRow({{"\\texttt{flag}", std::nullopt, true}, {"name", std::nullopt, false}});
  table.addRow({{"", Color{0.4, 1.0, 0.4}, false}, {"alpha", std::nullopt, false}});
  table.addRow({{"", Color{1.0, 0.4, 0.4}, false}, {"beta", std::nullopt, false}});
  table.setRowRule(0, 2);
  table.setColumnRule(0);
  return table;
}

}  // namespace

TEST_CASE("empty figure renders a minimal environment", "[latex]") {
  const std::string tex = renderFigure(Figure2D{});
  CHECK(tex ==
        "\\begin{tikzpicture}[x=10.000000mm,y=10.000000mm]\n"
        "\\end{tikzpicture}\n");
}

TEST_CASE("unit square golden", "[latex]") {
  const std::string tex = renderFigure(unitSquareFigure());
  CHECK(tex == readFile(goldenDir() / "figure_square.tex"));

  // exactly one path command carrying the four corners
  CHECK(countOccurrences(tex, "\\draw") == 1);
  CHECK(countOccurrences(tex, "(0.000000,0.000000)") == 1);
  CHECK(countOccurrences(tex, "(1.000000,0.000000)") == 1);
  CHECK(countOccurrences(tex, "(1.000000,1.000000)") == 1);
  CHECK(countOccurrences(tex, "(0.000000,1.000000)") == 1);
}

TEST_CASE("render determinism", "[latex]") {
  CHECK(renderFigure(unitSquareFigure()) == renderFigure(unitSquareFigure()));
  CHECK(renderScene(cubeScene()) == renderScene(cubeScene()));
  CHECK(renderTable(smallTable()) == renderTable(smallTable()));
}

TEST_CASE("cluster plot defines one color per cluster plus black", "[latex]") {
  const std::size_t k = 7;
  Figure2D fig;
  for (std::size_t i = 0; i < k; ++i) {
    Style style;
    style.color = clusterColor(i);
    style.marker = Marker::Dot;
    fig.addPoints({Vector2d(static_cast<double>(i), 0.0)}, style);
  }
  Style outlier;
  outlier.color = Color::black();
  outlier.marker = Marker::Dot;
  fig.addPoints({Vector2d(-1.0, 0.0)}, outlier);

  const std::string tex = renderFigure(fig);
  CHECK(countOccurrences(tex, "\\definecolor") == k + 1);
  CHECK(countOccurrences(tex, "{rgb}{0.000000,0.000000,0.000000}") == 1);

  // palette never collides with itself or black for small k
  for (std::size_t i = 0; i < 64; ++i) {
    CHECK(clusterColor(i) != Color::black());
    for (std::size_t j = i + 1; j < 64; ++j) {
      CHECK(clusterColor(i) != clusterColor(j));
    }
  }
}

TEST_CASE("non-finite coordinates are rejected with the primitive index", "[latex]") {
  Figure2D fig;
  fig.addPolyline({Vector2d(0, 0), Vector2d(1, 1)}, Style{});
  fig.addPoints({Vector2d(std::numeric_limits<double>::quiet_NaN(), 0)},
                Style{Color::black(), 0.5, Marker::Dot, std::nullopt});
  CHECK_THROWS_WITH(renderFigure(fig),
                    Catch::Matchers::ContainsSubstring("primitive 1"));
}

TEST_CASE("draw order follows the draw list", "[latex]") {
  Figure2D fig;
  Style a;
  a.color = {1.0, 0.0, 0.0};
  Style b;
  b.color = {0.0, 1.0, 0.0};
  fig.addSegment(LineSegment2d(Vector2d(0, 0), Vector2d(1, 0)), a);
  fig.addSegment(LineSegment2d(Vector2d(0, 1), Vector2d(1, 1)), b);
  const std::string tex = renderFigure(fig);
  CHECK(tex.find("\\draw[c0") < tex.find("\\draw[c1"));
}

TEST_CASE("scene projection", "[latex]") {
  // on-axis point through a pinhole lands at the origin
  Scene3D scene;
  Style style;
  style.marker = Marker::Dot;
  scene.addPoints({Vector3d(0, 0, 2)}, style);
  scene.setProjection({Projection::Kind::Pinhole, 1.0});
  const SceneProjection projected = projectScene(scene);
  REQUIRE_FALSE(projected.all_culled);
  const auto& points =
      std::get<Figure2D::PointSet>(projected.figure.primitives().at(0));
  REQUIRE(points.points.size() == 1);
  CHECK(distance(points.points[0], Vector2d(0, 0)) < 1e-15);

  // orthographic projection drops z
  Scene3D ortho;
  ortho.addPolyline({Vector3d(0.5, -0.25, 9), Vector3d(1.5, 2.0, -3)}, Style{});
  const auto flat = projectScene(ortho);
  const auto& polyline =
      std::get<Figure2D::PolylinePrim>(flat.figure.primitives().at(0));
  CHECK(polyline.points[0] == Vector2d(0.5, -0.25));
  CHECK(polyline.points[1] == Vector2d(1.5, 2.0));
}

TEST_CASE("painter order puts the farther square first", "[latex]") {
  Scene3D scene;
  Style near_style;
  near_style.color = {1.0, 0.0, 0.0};
  Style far_style;
  far_style.color = {0.0, 0.0, 1.0};
  // insertion order: near first; emission order must flip it
  scene.addPolygon({Vector3d(-1, -1, 1), Vector3d(1, -1, 1), Vector3d(1, 1, 1),
                    Vector3d(-1, 1, 1)},
                   near_style);
  scene.addPolygon({Vector3d(-1, -1, 2), Vector3d(1, -1, 2), Vector3d(1, 1, 2),
                    Vector3d(-1, 1, 2)},
                   far_style);
  const std::string tex = renderScene(scene);
  const std::string far_def = "{rgb}{0.000000,0.000000,1.000000}";
  const std::string near_def = "{rgb}{1.000000,0.000000,0.000000}";
  CHECK(tex.find(far_def) < tex.find(near_def));
}

TEST_CASE("scene cube golden", "[latex]") {
  bool all_culled = true;
  const std::string tex = renderScene(cubeScene(), &all_culled);
  CHECK_FALSE(all_culled);
  CHECK(tex == readFile(goldenDir() / "scene_cube.tex"));
}

TEST_CASE("pinhole culling", "[latex]") {
  Scene3D scene;
  Style style;
  style.marker = Marker::Dot;
  scene.addPoints({Vector3d(0, 0, -1), Vector3d(1, 1, -2)}, style);
  scene.addSegment(LineSegment3d(Vector3d(0, 0, -1), Vector3d(0, 0, 1)), style);
  scene.setProjection({Projection::Kind::Pinhole, 1.0});

  bool all_culled = false;
  renderScene(scene, &all_culled);
  CHECK(all_culled);

  Scene3D bad;
  bad.addPoints({Vector3d(0, 0, 1)}, style);
  bad.setProjection({Projection::Kind::Pinhole, 0.0});
  CHECK_THROWS_AS(renderScene(bad), std::invalid_argument);
}

TEST_CASE("table rendering", "[latex]") {
  TableSpec tiny;
  tiny.addRow({{"x"}});
  const std::string tex = renderTable(tiny);
  CHECK(countOccurrences(tex, "\\begin{tabular}{c}") == 1);
  CHECK(countOccurrences(tex, "x\\\\") == 1);

  CHECK(renderTable(smallTable()) == readFile(goldenDir() / "table_small.tex"));

  TableSpec ragged;
  ragged.addRow({{"a"}, {"b"}});
  ragged.addRow({{"c"}});
  CHECK_THROWS_WITH(renderTable(ragged), Catch::Matchers::ContainsSubstring("ragged"));

  CHECK_THROWS_AS(renderTable(TableSpec{}), std::invalid_argument);
}

TEST_CASE("capability table reproduces the registry", "[latex]") {
  const std::string tex = renderTable(capabilityTable());

  const auto& registry = capabilityRegistry();
  std::size_t expected_true = 0;
  constexpr std::size_t kFlagsPerRow = 10;
  for (const auto& rec : registry) {
    expected_true += rec.is_dimensional + rec.has_element_type + rec.has_metric +
                     rec.is_invertible + rec.has_identity + rec.has_nan +
                     rec.has_random + rec.applicable_translation +
                     rec.applicable_rotation + rec.applicable_rigid_tf;
  }

  CHECK(countOccurrences(tex, "\\cellcolor") == registry.size() * kFlagsPerRow);
  // green cells = true flags; red cells = the rest
  CHECK(countOccurrences(tex, "\\cellcolor{c0}") == expected_true);
  CHECK(countOccurrences(tex, "\\cellcolor{c1}") ==
        registry.size() * kFlagsPerRow - expected_true);
  for (const auto& rec : registry) {
    CHECK(tex.find("\\texttt{" + rec.type_name + "}") != std::string::npos);
  }
}

TEST_CASE("document export", "[latex]") {
  const auto dir = std::filesystem::temp_directory_path() / "rtl_latex_test";
  std::filesystem::create_directories(dir);

  TexDocument doc;
  doc.addFigure(unitSquareFigure(), "First");
  doc.addFigure(Figure2D{}, "Second");
  doc.addFigure(unitSquareFigure(), "Third");
  doc.addTable(smallTable(), "Numbers");

  const auto path = dir / "doc.tex";
  exportDocument(doc, path);
  const std::string tex = readFile(path);

  // four float environments in insertion order
  CHECK(countOccurrences(tex, "\\begin{figure}[htbp]") == 3);
  CHECK(countOccurrences(tex, "\\begin{table}[htbp]") == 1);
  CHECK(tex.find("\\caption{First}") < tex.find("\\caption{Second}"));
  CHECK(tex.find("\\caption{Second}") < tex.find("\\caption{Third}"));
  CHECK(tex.find("\\caption{Third}") < tex.find("\\caption{Numbers}"));
  CHECK(tex.rfind("\\documentclass{article}\n", 0) == 0);

  CHECK_THROWS_AS(exportDocument(TexDocument{}, dir / "empty.tex"),
                  std::invalid_argument);

  // minimal document of one empty figure is still a valid file
  TexDocument minimal;
  minimal.addFigure(Figure2D{});
  exportDocument(minimal, dir / "minimal.tex");
  CHECK(readFile(dir / "minimal.tex").find("\\end{document}") != std::string::npos);
}

TEST_CASE("compile status", "[latex]") {
  const auto dir = std::filesystem::temp_directory_path() / "rtl_latex_test";
  std::filesystem::create_directories(dir);
  TexDocument doc;
  doc.addFigure(unitSquareFigure());
  const auto path = dir / "compile.tex";
  exportDocument(doc, path);

  // missing tool: skipped cleanly
  const CompileStatus missing = compileDocument(path, "rtl-no-such-latex-tool");
  CHECK(missing.skipped);
  CHECK_FALSE(missing.ok);
  CHECK(missing.reason.find("compiler not found") != std::string::npos);

  // a tool that exists but fails: error with exit status, never a crash
  const CompileStatus failing = compileDocument(path, "false");
  CHECK_FALSE(failing.skipped);
  CHECK_FALSE(failing.ok);
  CHECK(failing.exit_code != 0);

  const CompileStatus passing = compileDocument(path, "true");
  CHECK(passing.ok);
}

TEST_CASE("latex command resolution", "[latex]") {
  CHECK(resolveLatexCommand("xelatex") == "xelatex");
  ::setenv("RTL_LATEX_CMD", "lualatex", 1);
  CHECK(resolveLatexCommand() == "lualatex");
  CHECK(resolveLatexCommand("explicit-wins") == "explicit-wins");
  ::unsetenv("RTL_LATEX_CMD");
  CHECK(resolveLatexCommand() == "pdflatex");
}

TEST_CASE("axes and markers", "[latex]") {
  Figure2D fig;
  Axes axes;
  axes.x_min = -1.0;
  axes.x_max = 3.0;
  axes.y_min = -1.0;
  axes.y_max = 2.0;
  axes.tick_step = 1.0;
  fig.setAxes(axes);

  Style cross;
  cross.marker = Marker::Cross;
  Style square;
  square.marker = Marker::Square;
  Style none;
  none.marker = Marker::None;
  fig.addPoints({Vector2d(0.5, 0.5)}, cross);
  fig.addPoints({Vector2d(1.5, 0.5)}, square);
  fig.addPoints({Vector2d(2.5, 0.5)}, none);

  const std::string tex = renderFigure(fig);
  CHECK(countOccurrences(tex, "->]") == 2);  // two axis arrows
  CHECK(tex.find("rectangle") != std::string::npos);          // square marker
  CHECK(countOccurrences(tex, "+(-1.5pt,-1.5pt) --") == 1);   // cross marker
  CHECK(tex.find("node[below=3pt") != std::string::npos);     // tick labels
  // marker None draws nothing for its point
  CHECK(tex.find("(2.500000,0.500000)") == std::string::npos);
}

TEST_CASE("style validation", "[latex]") {
  Style bad;
  bad.color = {1.5, 0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.color = {0.5, 0.5, 0.5};
  bad.line_width = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  Figure2D fig;
  fig.addPoints({Vector2d(0, 0)}, bad);
  CHECK_THROWS_AS(renderFigure(fig), std::invalid_argument);
}
