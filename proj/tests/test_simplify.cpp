#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "rtl/core/line_segment.hpp"
#include "rtl/vectorization/shapes.hpp"
#include "rtl/vectorization/simplify.hpp"

using namespace rtl;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 generator(808);
  return generator;
}

std::vector<Vector2d> randomPolyline(std::size_t n) {
  std::uniform_real_distribution<double> step(-1.0, 1.0);
  std::vector<Vector2d> points;
  Vector2d p(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    p += Vector2d(std::abs(step(rng())) + 0.05, step(rng()));
    points.push_back(p);
  }
  return points;
}

/// Deviation of every input point from its kept-index interval's chord.
double maxChordDeviation(const std::vector<Vector2d>& points,
                         const std::vector<std::size_t>& kept) {
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
    const LineSegment2d chord(points[kept[k]], points[kept[k + 1]]);
    for (std::size_t i = kept[k]; i <= kept[k + 1]; ++i) {
      worst = std::max(worst, distance(points[i], chord));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("douglas-peucker on the three-point roof", "[simplify]") {
  const std::vector<Vector2d> roof{Vector2d(0, 0), Vector2d(1, 0.5), Vector2d(2, 0)};

  // max chord deviation is exactly 0.5
  CHECK(douglasPeucker(roof, 0.6) == std::vector<std::size_t>{0, 2});
  CHECK(douglasPeucker(roof, 0.4) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("douglas-peucker keeps endpoints only on straight runs", "[simplify]") {
  std::vector<Vector2d> line;
  for (int i = 0; i < 1000; ++i) {
    line.emplace_back(0.01 * i, 0.0);
  }
  for (const double tol : {1e-9, 0.1, 10.0}) {
    CHECK(douglasPeucker(line, tol) == std::vector<std::size_t>{0, 999});
  }
}

TEST_CASE("douglas-peucker guarantee", "[simplify]") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto points = randomPolyline(300);
    const double tol = 0.05 + 0.01 * trial;
    const auto kept = douglasPeucker(points, tol);

    REQUIRE(kept.front() == 0);
    REQUIRE(kept.back() == points.size() - 1);
    for (std::size_t i = 1; i < kept.size(); ++i) {
      CHECK(kept[i - 1] < kept[i]);
    }
    CHECK(maxChordDeviation(points, kept) <= tol);
  }
}

TEST_CASE("douglas-peucker argument validation", "[simplify]") {
  const std::vector<Vector2d> two{Vector2d(0, 0), Vector2d(1, 0)};
  CHECK_THROWS_AS(douglasPeucker(two, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(douglasPeucker(std::vector<Vector2d>{Vector2d(0, 0)}, 0.1),
                  std::invalid_argument);
}

TEST_CASE("reumann-witkam on straight runs", "[simplify]") {
  std::vector<Vector2d> line;
  for (int i = 0; i < 500; ++i) {
    line.emplace_back(0.02 * i, 1.0);
  }
  CHECK(reumannWitkam(line, 0.01) == std::vector<std::size_t>{0, 499});
}

TEST_CASE("reumann-witkam keys the corner of an L", "[simplify]") {
  // arms far longer than tol and a step larger than tol, so the first point
  // leaving the corridor is right after the corner
  std::vector<Vector2d> points;
  for (int i = 0; i <= 50; ++i) {
    points.emplace_back(0.1 * i, 0.0);  // corner at index 50 = (5, 0)
  }
  for (int i = 1; i <= 50; ++i) {
    points.emplace_back(5.0, 0.1 * i);
  }

  const auto kept = reumannWitkam(points, 0.05);
  REQUIRE(kept.size() == 3);
  CHECK(kept.front() == 0);
  CHECK(std::abs(static_cast<long>(kept[1]) - 50L) <= 1);
  CHECK(kept.back() == points.size() - 1);
}

TEST_CASE("reumann-witkam output is a subsequence", "[simplify]") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto points = randomPolyline(200);
    const auto kept = reumannWitkam(points, 0.2);

    CHECK(kept.size() <= points.size());
    REQUIRE(kept.front() == 0);
    REQUIRE(kept.back() == points.size() - 1);
    for (std::size_t i = 1; i < kept.size(); ++i) {
      CHECK(kept[i - 1] < kept[i]);
    }
  }
}

TEST_CASE("simplifiers handle duplicate points", "[simplify]") {
  std::vector<Vector2d> with_dups{Vector2d(0, 0), Vector2d(0, 0), Vector2d(1, 0),
                                  Vector2d(1, 0), Vector2d(2, 1)};
  const auto dp = douglasPeucker(with_dups, 0.1);
  CHECK(dp.front() == 0);
  CHECK(dp.back() == 4);

  const auto rw = reumannWitkam(with_dups, 0.1);
  CHECK(rw.front() == 0);
  CHECK(rw.back() == 4);

  // fully degenerate input: every point identical
  const std::vector<Vector2d> all_same(10, Vector2d(3, 3));
  CHECK(reumannWitkam(all_same, 0.1) == std::vector<std::size_t>{0, 9});
  CHECK(douglasPeucker(all_same, 0.1) == std::vector<std::size_t>{0, 9});
}

TEST_CASE("simplifiers work in 3-D", "[simplify]") {
  const auto helix = makeHelix<double>(500, 0.0, 0);
  const auto dp = douglasPeucker(helix, 0.05);
  CHECK(dp.size() > 2);
  CHECK(dp.size() < helix.size());

  const auto rw = reumannWitkam(helix, 0.05);
  CHECK(rw.size() > 2);
  CHECK(rw.size() < helix.size());
}
