// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_VECTORIZATION_SYM_EIGEN_HPP
#define RTL_VECTORIZATION_SYM_EIGEN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace rtl {

/// Eigen decomposition of the symmetric 2x2 matrix [[a, b], [b, c]].
/// Eigenvalues descending; vectors[k] belongs to values[k]. The isotropic
/// case resolves to the coordinate axes.
template <typename S>
struct SymEigen2 {
  std::array<S, 2> values;
  std::array<std::array<S, 2>, 2> vectors;
};

template <typename S>
SymEigen2<S> solveSym2(S a, S b, S c) {
  const S mean = (a + c) / S(2);
  const S half_diff = (a - c) / S(2);
  const S r = std::hypot(half_diff, b);
  const S theta = r == S(0) ? S(0) : std::atan2(S(2) * b, a - c) / S(2);
  const S ct = std::cos(theta);
  const S st = std::sin(theta);
  return SymEigen2<S>{{mean + r, mean - r}, {{{ct, st}, {-st, ct}}}};
}

/// Eigen decomposition of a symmetric 3x3 matrix. Eigenvalues descending;
/// column k of `vectors` belongs to values[k].
template <typename S>
struct SymEigen3 {
  std::array<S, 3> values;
  Eigen::Matrix<S, 3, 3> vectors;
};

namespace detail {

/// Unit eigenvector of (m - lambda I) via the largest cross product of its
/// rows. Returns false when the rows are too close to parallel for a reliable
/// answer, in which case the caller falls back to the iterative solver.
template <typename S>
bool eigenvectorFromRows(const Eigen::Matrix<S, 3, 3>& m, S lambda, S scale,
                         Eigen::Matrix<S, 3, 1>& out) {
  const Eigen::Matrix<S, 3, 3> shifted =
      m - lambda * Eigen::Matrix<S, 3, 3>::Identity();
  Eigen::Matrix<S, 3, 1> best = Eigen::Matrix<S, 3, 1>::Zero();
  S best_norm2 = S(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Eigen::Matrix<S, 3, 1> cand =
          shifted.row(i).transpose().cross(shifted.row(j).transpose());
      const S n2 = cand.squaredNorm();
      if (n2 > best_norm2) {
        best_norm2 = n2;
        best = cand;
      }
    }
  }
  const S tol = S(1e-24) * scale * scale * scale * scale;
  if (best_norm2 <= tol) {
    return false;
  }
  out = best / std::sqrt(best_norm2);
  return true;
}

template <typename S>
SymEigen3<S> solveSym3Iterative(const Eigen::Matrix<S, 3, 3>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<S, 3, 3>> solver(m);
  SymEigen3<S> out;
  // Eigen reports ascending order.
  for (int k = 0; k < 3; ++k) {
    out.values[k] = solver.eigenvalues()(2 - k);
    out.vectors.col(k) = solver.eigenvectors().col(2 - k);
  }
  return out;
}

}  // namespace detail

/// Closed-form trigonometric solution of the symmetric 3x3 eigenproblem,
/// falling back to the iterative solver when the eigenvalue spread is below
/// 1e-12 of the matrix scale or the closed-form eigenvectors degenerate.
template <typename S>
SymEigen3<S> solveSym3(const Eigen::Matrix<S, 3, 3>& m) {
  const S scale = std::max(m.cwiseAbs().maxCoeff(), S(1e-300));
  const S p1 = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
  const S q = m.trace() / S(3);

  SymEigen3<S> out;
  if (p1 == S(0)) {
    // Already diagonal.
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return m(i, i) > m(j, j); });
    for (int k = 0; k < 3; ++k) {
      out.values[k] = m(order[k], order[k]);
      out.vectors.col(k) = Eigen::Matrix<S, 3, 1>::Unit(order[k]);
    }
    return out;
  }

  const S p2 = (m(0, 0) - q) * (m(0, 0) - q) + (m(1, 1) - q) * (m(1, 1) - q) +
               (m(2, 2) - q) * (m(2, 2) - q) + S(2) * p1;
  const S p = std::sqrt(p2 / S(6));
  const Eigen::Matrix<S, 3, 3> b =
      (m - q * Eigen::Matrix<S, 3, 3>::Identity()) / p;
  const S r = std::clamp(b.determinant() / S(2), S(-1), S(1));
  const S phi = std::acos(r) / S(3);

  constexpr S kTwoThirdsPi = S(2) * std::numbers::pi_v<S> / S(3);
  out.values[0] = q + S(2) * p * std::cos(phi);
  out.values[2] = q + S(2) * p * std::cos(phi + kTwoThirdsPi);
  out.values[1] = S(3) * q - out.values[0] - out.values[2];

  if (out.values[0] - out.values[2] < S(1e-12) * scale) {
    return detail::solveSym3Iterative(m);
  }

  Eigen::Matrix<S, 3, 1> v0;
  Eigen::Matrix<S, 3, 1> v2;
  if (!detail::eigenvectorFromRows(m, out.values[0], scale, v0) ||
      !detail::eigenvectorFromRows(m, out.values[2], scale, v2)) {
    return detail::solveSym3Iterative(m);
  }
  out.vectors.col(0) = v0;
  out.vectors.col(2) = v2;
  out.vectors.col(1) = v2.cross(v0).normalized();
  return out;
}

}  // namespace rtl

#endif  // RTL_VECTORIZATION_SYM_EIGEN_HPP
