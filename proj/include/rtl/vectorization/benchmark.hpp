// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_VECTORIZATION_BENCHMARK_HPP
#define RTL_VECTORIZATION_BENCHMARK_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtl/core/line_segment.hpp"
#include "rtl/latex/table.hpp"
#include "rtl/vectorization/ftls.hpp"
#include "rtl/vectorization/shapes.hpp"
#include "rtl/vectorization/simplify.hpp"

namespace rtl {

enum class Algorithm { Ftls, FtlsGlobal, Dp, Rw };

inline std::string algorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::Ftls: return "ftls";
    case Algorithm::FtlsGlobal: return "ftls-global";
    case Algorithm::Dp: return "dp";
    case Algorithm::Rw: return "rw";
  }
  return "?";
}

inline Algorithm parseAlgorithm(const std::string& name) {
  if (name == "ftls") return Algorithm::Ftls;
  if (name == "ftls-global" || name == "ftls+global") return Algorithm::FtlsGlobal;
  if (name == "dp") return Algorithm::Dp;
  if (name == "rw") return Algorithm::Rw;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "', valid: ftls, ftls-global, dp, rw");
}

/// One timed measurement: an algorithm run on a cloud of n points.
struct BenchmarkRow {
  std::string algorithm;
  std::size_t n = 0;
  double time_us = 0.0;
  double total_sse = 0.0;
  std::size_t segments = 0;
};

struct BenchmarkConfig {
  BenchShape shape = BenchShape::Semicircle;
  std::vector<std::size_t> sizes;
  std::vector<Algorithm> algorithms;
  double sigma_max = 0.05;       // FTLS acceptance threshold
  double tol = 0.05;             // DP / RW tolerance
  double noise_sigma = 0.01;
  std::uint64_t seed = 1;
  std::size_t global_max_iter = 100;
};

namespace detail {

/// Residual error of a point-eliminating simplification: squared distances of
/// all points to the chord of their kept-index interval.
template <int D, typename S>
double eliminationSse(std::span<const VectorND<D, S>> points,
                      const std::vector<std::size_t>& kept) {
  double sse = 0.0;
  for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
    const LineSegmentND<D, S> chord(points[kept[k]], points[kept[k + 1]]);
    for (std::size_t i = kept[k] + 1; i < kept[k + 1]; ++i) {
      const S d = distance(points[i], chord);
      sse += static_cast<double>(d) * static_cast<double>(d);
    }
  }
  return sse;
}

template <int D, typename S>
BenchmarkRow benchmarkOne(std::span<const VectorND<D, S>> points,
                          Algorithm algorithm, const BenchmarkConfig& config) {
  using Clock = std::chrono::steady_clock;
  BenchmarkRow row;
  row.algorithm = algorithmName(algorithm);
  row.n = points.size();

  const auto start = Clock::now();
  switch (algorithm) {
    case Algorithm::Ftls: {
      const auto result = ftlsExtract(points, static_cast<S>(config.sigma_max), true);
      row.total_sse = static_cast<double>(result.total_sse);
      row.segments = result.segments.size();
      break;
    }
    case Algorithm::FtlsGlobal: {
      auto result = ftlsExtract(points, static_cast<S>(config.sigma_max), true);
      const PrefixMoments<D, S> pm(points);
      result = globalOptimize(points, pm, std::move(result), config.global_max_iter);
      row.total_sse = static_cast<double>(result.total_sse);
      row.segments = result.segments.size();
      break;
    }
    case Algorithm::Dp: {
      const auto kept = douglasPeucker(points, static_cast<S>(config.tol));
      row.total_sse = eliminationSse(points, kept);
      row.segments = kept.size() - 1;
      break;
    }
    case Algorithm::Rw: {
      const auto kept = reumannWitkam(points, static_cast<S>(config.tol));
      row.total_sse = eliminationSse(points, kept);
      row.segments = kept.size() - 1;
      break;
    }
  }
  const auto stop = Clock::now();
  row.time_us =
      std::chrono::duration_cast<std::chrono::duration<double, std::micro>>(stop - start)
          .count();
  return row;
}

}  // namespace detail

/// Times each configured algorithm on identical generated clouds, one row per
/// (algorithm, size). Error and segment-count columns are deterministic per
/// seed; only the timing column varies between runs.
inline std::vector<BenchmarkRow> runBenchmark(const BenchmarkConfig& config) {
  if (config.sizes.empty() || config.algorithms.empty()) {
    throw std::invalid_argument("runBenchmark: sizes and algorithms must be non-empty");
  }
  for (const std::size_t n : config.sizes) {
    if (n < 2) {
      throw std::invalid_argument("runBenchmark: sizes must be at least 2");
    }
  }

  std::vector<BenchmarkRow> rows;
  for (const std::size_t n : config.sizes) {
    if (config.shape == BenchShape::Helix) {
      const auto cloud = makeHelix<double>(n, config.noise_sigma, config.seed);
      for (const Algorithm a : config.algorithms) {
        rows.push_back(detail::benchmarkOne<3, double>(cloud, a, config));
      }
    } else {
      const auto cloud = makeShape2<double>(config.shape, n, config.noise_sigma,
                                            config.seed);
      for (const Algorithm a : config.algorithms) {
        rows.push_back(detail::benchmarkOne<2, double>(cloud, a, config));
      }
    }
  }
  return rows;
}

/// CSV serialization: header `algorithm,n,time_us,total_sse,segments`.
inline std::string benchmarkCsv(std::span<const BenchmarkRow> rows) {
  std::string out = "algorithm,n,time_us,total_sse,segments\n";
  char buf[160];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%zu,%.3f,%.9g,%zu\n",
                  row.algorithm.c_str(), row.n, row.time_us, row.total_sse,
                  row.segments);
    out += buf;
  }
  return out;
}

/// Table rendering of benchmark rows for LaTeX reports.
inline TableSpec benchmarkTable(std::span<const BenchmarkRow> rows) {
  const auto cell = [](std::string text) {
    TableSpec::Cell c;
    c.text = std::move(text);
    return c;
  };
  TableSpec table;
  table.addRow({cell("algorithm"), cell("n"), cell("time [us]"),
                cell("total sse"), cell("segments")});
  table.setRowRule(0);
  char buf[64];
  for (const auto& row : rows) {
    std::vector<TableSpec::Cell> cells;
    cells.push_back(cell(row.algorithm));
    cells.push_back(cell(std::to_string(row.n)));
    std::snprintf(buf, sizeof(buf), "%.1f", row.time_us);
    cells.push_back(cell(buf));
    std::snprintf(buf, sizeof(buf), "%.6g", row.total_sse);
    cells.push_back(cell(buf));
    cells.push_back(cell(std::to_string(row.segments)));
    table.addRow(std::move(cells));
  }
  return table;
}

}  // namespace rtl

#endif  // RTL_VECTORIZATION_BENCHMARK_HPP
