#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "rtl/core/bounding_box.hpp"
#include "rtl/core/frustum.hpp"
#include "rtl/core/line_segment.hpp"
#include "rtl/core/matrix.hpp"
#include "rtl/core/polygon.hpp"
#include "rtl/core/quaternion.hpp"
#include "rtl/core/vector.hpp"

using namespace rtl;

namespace {

/// Independent rotation-matrix oracle: the standard quaternion-to-matrix
/// formula written out, bypassing the library's own conversion.
Vector3d rotateByMatrixOracle(const Quaterniond& q, const Vector3d& v) {
  const double n = std::sqrt(q.w() * q.w() + q.x() * q.x() + q.y() * q.y() +
                             q.z() * q.z());
  const double w = q.w() / n, x = q.x() / n, y = q.y() / n, z = q.z() / n;
  const double r[3][3] = {
      {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
      {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
      {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
  Vector3d out;
  for (int i = 0; i < 3; ++i) {
    out[i] = r[i][0] * v.x() + r[i][1] * v.y() + r[i][2] * v.z();
  }
  return out;
}

template <int D>
VectorND<D, double> randomVector(std::mt19937_64& rng, double lo = -10.0,
                                 double hi = 10.0) {
  std::uniform_real_distribution<double> uniform(lo, hi);
  VectorND<D, double> v;
  for (int c = 0; c < D; ++c) {
    v[c] = uniform(rng);
  }
  return v;
}

Quaterniond randomUnitQuaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  return Quaterniond(w / n, x / n, y / n, z / n);
}

}  // namespace

TEST_CASE("vector distance", "[core]") {
  CHECK(distance(Vector2d(0, 0), Vector2d(3, 4)) == 5.0);
  CHECK(distance(Vector3d(1, 2, 3), Vector3d(1, 2, 3)) == 0.0);

  // componentwise brute-force oracle on 5-D pairs
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = randomVector<5>(rng);
    const auto b = randomVector<5>(rng);
    double sum = 0.0;
    for (int c = 0; c < 5; ++c) {
      sum += (a[c] - b[c]) * (a[c] - b[c]);
    }
    CHECK(distance(a, b) == Catch::Approx(std::sqrt(sum)).epsilon(1e-12));
  }
}

TEST_CASE("metric axioms", "[core]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = randomVector<3>(rng);
    const auto b = randomVector<3>(rng);
    const auto c = randomVector<3>(rng);
    const double ab = distance(a, b);
    const double scale = 1.0 + ab + distance(b, c) + distance(a, c);

    CHECK(ab >= 0.0);
    CHECK(ab == distance(b, a));
    CHECK(distance(a, a) == 0.0);
    CHECK(distance(a, c) <= ab + distance(b, c) + 1e-9 * scale);
  }
}

TEST_CASE("point-segment distance", "[core]") {
  const LineSegment2d s(Vector2d(0, 0), Vector2d(2, 0));
  CHECK(distance(Vector2d(1, 1), s) == Catch::Approx(1.0));
  CHECK(distance(Vector2d(-1, 0), s) == Catch::Approx(1.0));

  // degenerate segment falls back to point distance
  const LineSegment2d degenerate(Vector2d(1, 1), Vector2d(1, 1));
  CHECK(distance(Vector2d(4, 5), degenerate) == Catch::Approx(5.0));
  CHECK_THROWS_AS(degenerate.direction(), std::domain_error);

  // dense parameter sweep oracle in 3-D
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = randomVector<3>(rng);
    const auto a = randomVector<3>(rng);
    const auto b = randomVector<3>(rng);
    const LineSegment3d seg(a, b);

    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 1000; ++k) {
      const double t = static_cast<double>(k) / 1000.0;
      best = std::min(best, distance(p, a + (b - a) * t));
    }
    CHECK(distance(p, seg) == Catch::Approx(best).margin(1e-4));
  }
}

TEST_CASE("segment-segment distance", "[core]") {
  const LineSegment2d a(Vector2d(0, 0), Vector2d(2, 0));
  const LineSegment2d crossing(Vector2d(1, -1), Vector2d(1, 1));
  CHECK(distance(a, crossing) == Catch::Approx(0.0).margin(1e-12));

  const LineSegment2d parallel(Vector2d(0, 1), Vector2d(2, 1));
  CHECK(distance(a, parallel) == Catch::Approx(1.0));
  CHECK(distance(parallel, a) == Catch::Approx(1.0));

  const LineSegment2d behind(Vector2d(5, 3), Vector2d(6, 3));
  CHECK(distance(a, behind) == Catch::Approx(distance(Vector2d(2, 0), Vector2d(5, 3))));
}

TEST_CASE("quaternion rotation", "[core]") {
  const Quaterniond identity = Quaterniond::identity();
  const Vector3d v(1, 2, 3);
  CHECK(distance(identity.rotated(v), v) == 0.0);

  const Quaterniond quarter_z(std::numbers::pi / 2, Vector3d(0, 0, 1));
  const Vector3d rotated = quarter_z.rotated(Vector3d(1, 0, 0));
  CHECK(rotated.x() == Catch::Approx(0.0).margin(1e-15));
  CHECK(rotated.y() == Catch::Approx(1.0));
  CHECK(rotated.z() == Catch::Approx(0.0).margin(1e-15));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Quaterniond q = randomUnitQuaternion(rng);
    const Vector3d x = randomVector<3>(rng);
    CHECK(distance(q.rotated(x), rotateByMatrixOracle(q, x)) < 1e-12 * (1 + x.norm()));
    CHECK(std::abs(q.rotated(x).norm() - x.norm()) < 1e-12 * (1 + x.norm()));
  }
}

TEST_CASE("quaternion normalization reporting", "[core]") {
  bool renormalized = false;
  const Quaterniond off_unit(2.0, 0.0, 0.0, 0.0);
  const Vector3d v = off_unit.rotated(Vector3d(1, 0, 0), &renormalized);
  CHECK(renormalized);
  CHECK(distance(v, Vector3d(1, 0, 0)) < 1e-15);

  renormalized = true;
  Quaterniond::identity().rotated(Vector3d(1, 0, 0), &renormalized);
  CHECK_FALSE(renormalized);
}

TEST_CASE("quaternion algebra", "[core]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q1 = randomUnitQuaternion(rng);
    const auto q2 = randomUnitQuaternion(rng);
    const auto q3 = randomUnitQuaternion(rng);

    // Hamilton product associativity
    CHECK(distance((q1 * q2) * q3, q1 * (q2 * q3)) < 1e-12);

    // composition: rotate(q1*q2, v) == rotate(q1, rotate(q2, v))
    const Vector3d v = randomVector<3>(rng);
    CHECK(distance((q1 * q2).rotated(v), q1.rotated(q2.rotated(v))) <
          1e-10 * (1 + v.norm()));

    // inverse
    const auto unit = q1 * q1.inverted();
    CHECK(distance(unit, Quaterniond::identity()) < 1e-12);
  }
  CHECK_THROWS_AS(Quaterniond(0, 0, 0, 0).inverted(), std::domain_error);
}

TEST_CASE("bounding box from points", "[core]") {
  const std::vector<Vector2d> single{Vector2d(0, 0)};
  const auto box1 = BoundingBox2d::fromPoints(single);
  CHECK(box1.min() == Vector2d(0, 0));
  CHECK(box1.max() == Vector2d(0, 0));

  const std::vector<Vector2d> corners{Vector2d(0, 1), Vector2d(1, 0)};
  const auto box2 = BoundingBox2d::fromPoints(corners);
  CHECK(box2.min() == Vector2d(0, 0));
  CHECK(box2.max() == Vector2d(1, 1));

  CHECK_THROWS_AS(BoundingBox2d::fromPoints(std::vector<Vector2d>{}),
                  std::invalid_argument);

  // membership scan oracle
  std::mt19937_64 rng(5);
  std::vector<Vector3d> cloud;
  for (int i = 0; i < 100; ++i) {
    cloud.push_back(randomVector<3>(rng));
  }
  const auto box = BoundingBox3d::fromPoints(cloud);
  for (const auto& p : cloud) {
    CHECK(box.contains(p));
  }

  // idempotence: rebuilding from the two corners reproduces the box exactly
  const std::vector<Vector3d> extremes{box.min(), box.max()};
  CHECK(BoundingBox3d::fromPoints(extremes) == box);
}

TEST_CASE("nan sentinel", "[core]") {
  CHECK(Vector3d::nan().hasNaN());
  CHECK_FALSE(Vector3d(1, 2, 3).hasNaN());
  CHECK(Matrix3d::nan().hasNaN());
  CHECK_FALSE(Matrix3d::identity().hasNaN());
}

TEST_CASE("matrix algebra", "[core]") {
  const Matrix2d m{1, 2, 3, 4};
  CHECK(m(0, 1) == 2.0);
  CHECK(m(1, 0) == 3.0);
  CHECK(m.determinant() == Catch::Approx(-2.0));

  const Matrix2d inv = m.inverted();
  const Matrix2d prod = m * inv;
  CHECK(distance(prod, Matrix2d::identity()) < 1e-12);

  CHECK_THROWS_AS((Matrix2d{1, 2, 2, 4}).inverted(), std::domain_error);
  CHECK_THROWS_AS((Matrix2d{1, 2, 3}), std::invalid_argument);

  const MatrixND<2, 3, double> a{1, 0, 1, 0, 1, 0};
  const Vector3d x(1, 2, 3);
  const Vector2d y = a * x;
  CHECK(y.x() == 4.0);
  CHECK(y.y() == 2.0);
  CHECK(a.transposed()(2, 0) == 1.0);
}

TEST_CASE("polygon construction", "[core]") {
  CHECK_THROWS_AS(Polygon2d({Vector2d(0, 0), Vector2d(1, 0)}), std::invalid_argument);

  const Polygon2d triangle({Vector2d(0, 0), Vector2d(1, 0), Vector2d(0, 1)});
  CHECK(triangle.size() == 3);

  // planar quadrilateral in the z=1 plane
  const Polygon3d flat({Vector3d(0, 0, 1), Vector3d(1, 0, 1), Vector3d(1, 1, 1),
                        Vector3d(0, 1, 1)});
  CHECK(std::abs(std::abs(flat.normal().z()) - 1.0) < 1e-12);
  for (const auto& v : flat.vertices()) {
    CHECK(std::abs(flat.normal().dot(v) - flat.offset()) < 1e-12);
  }

  // clearly non-planar loop must be rejected
  CHECK_THROWS_AS(Polygon3d({Vector3d(0, 0, 0), Vector3d(1, 0, 0),
                             Vector3d(1, 1, 1), Vector3d(0, 1, 0)}),
                  std::invalid_argument);
}

TEST_CASE("frustum construction", "[core]") {
  const std::array<Vector3d, 4> dirs{
      Vector3d(1, 1, 1), Vector3d(-1, 1, 1), Vector3d(-1, -1, 1), Vector3d(1, -1, 1)};
  const Frustum3d frustum(Vector3d(0, 0, 0), dirs, 0.1, 10.0);
  for (const auto& d : frustum.cornerDirections()) {
    CHECK(std::abs(d.norm() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(Frustum3d(Vector3d(0, 0, 0), dirs, 10.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(Frustum3d(Vector3d(0, 0, 0), dirs, -1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("vector normalization", "[core]") {
  CHECK_THROWS_AS(Vector2d(0, 0).normalized(), std::domain_error);
  const Vector2d n = Vector2d(3, 4).normalized();
  CHECK(n.norm() == Catch::Approx(1.0));
}
