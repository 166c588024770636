// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_IO_PIPELINE_HPP
#define RTL_IO_PIPELINE_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rtl/io/ingest.hpp"
#include "rtl/latex/document.hpp"
#include "rtl/latex/figure2d.hpp"
#include "rtl/latex/scene3d.hpp"
#include "rtl/segmentation/segmentation.hpp"
#include "rtl/vectorization/benchmark.hpp"
#include "rtl/vectorization/ftls.hpp"
#include "rtl/vectorization/simplify.hpp"

namespace rtl {

enum class Stage { Ingest, Segment, Vectorize, Export };

inline const char* stageName(Stage stage) {
  switch (stage) {
    case Stage::Ingest: return "ingest";
    case Stage::Segment: return "segment";
    case Stage::Vectorize: return "vectorize";
    case Stage::Export: return "export";
  }
  return "?";
}

/// Pipeline failure carrying the stage it happened in.
class StageError : public std::runtime_error {
public:
  StageError(Stage stage, const std::string& message)
      : std::runtime_error(message), stage_(stage) {}
  Stage stage() const { return stage_; }

private:
  Stage stage_;
};

/// Everything needed to run ingest -> segment -> vectorize -> export.
struct PipelineConfig {
  std::string input_path;
  PointFormat format = PointFormat::Csv;
  int dim = 2;
  SegmentationParams segmentation;
  bool circular = false;
  Algorithm vectorizer = Algorithm::Ftls;
  double sigma_max = 0.05;
  double tol = 0.05;
  std::string out_tex;  // empty = no figure output
  std::string out_csv;  // empty = no CSV output
  std::uint64_t seed = 1;
  std::string latex_cmd;  // compiler override for --compile
  bool compile = false;
  std::size_t global_max_iter = 100;

  void validate() const {
    if (input_path.empty()) {
      throw std::invalid_argument("config: input path is empty");
    }
    if (dim != 2 && dim != 3) {
      throw std::invalid_argument("config: dim must be 2 or 3");
    }
    if (!(sigma_max > 0.0) || !(tol > 0.0)) {
      throw std::invalid_argument("config: tolerances must be positive");
    }
    segmentation.validate();
  }
};

struct PipelineReport {
  std::size_t point_count = 0;
  std::size_t cluster_count = 0;
  std::size_t outlier_count = 0;
  std::size_t segment_count = 0;
  std::vector<std::string> written;
  CompileStatus compile_status;
};

namespace detail {

/// One output row of the segment CSV.
template <int D>
struct SegmentRecord {
  std::size_t cluster_id;
  std::size_t seg_id;
  VectorND<D, double> from;
  VectorND<D, double> to;
  double sse;
  std::size_t count;
};

template <int D>
std::string segmentsCsv(const std::vector<SegmentRecord<D>>& records) {
  std::string out = D == 2 ? "cluster_id,seg_id,x0,y0,x1,y1,sse,count\n"
                           : "cluster_id,seg_id,x0,y0,z0,x1,y1,z1,sse,count\n";
  char buf[64];
  const auto append = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    out += buf;
    out += ',';
  };
  for (const auto& rec : records) {
    out += std::to_string(rec.cluster_id) + ',' + std::to_string(rec.seg_id) + ',';
    for (int c = 0; c < D; ++c) {
      append(rec.from[c]);
    }
    for (int c = 0; c < D; ++c) {
      append(rec.to[c]);
    }
    append(rec.sse);
    out += std::to_string(rec.count) + '\n';
  }
  return out;
}

/// Vectorizes one cluster into polyline corner pairs with per-segment errors.
template <int D>
std::vector<SegmentRecord<D>> vectorizeCluster(
    const std::vector<VectorND<D, double>>& points, std::size_t cluster_id,
    const PipelineConfig& config) {
  std::vector<SegmentRecord<D>> records;
  if (points.size() < 2) {
    return records;
  }

  if (config.vectorizer == Algorithm::Ftls ||
      config.vectorizer == Algorithm::FtlsGlobal) {
    auto result = ftlsExtract(points, config.sigma_max, true);
    if (config.vectorizer == Algorithm::FtlsGlobal) {
      const PrefixMoments<D, double> pm(points);
      result = globalOptimize(points, pm, std::move(result), config.global_max_iter);
    }
    const Polyline<D, double> poly = polylineConstruct(result);
    for (std::size_t k = 0; k + 1 < poly.corners.size(); ++k) {
      records.push_back({cluster_id, k, poly.corners[k], poly.corners[k + 1],
                         result.fits[k].sse, result.fits[k].count});
    }
    return records;
  }

  const std::vector<std::size_t> kept =
      config.vectorizer == Algorithm::Dp
          ? douglasPeucker(points, config.tol)
          : reumannWitkam(points, config.tol);
  for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
    const LineSegmentND<D, double> chord(points[kept[k]], points[kept[k + 1]]);
    double sse = 0.0;
    for (std::size_t i = kept[k] + 1; i < kept[k + 1]; ++i) {
      const double d = distance(points[i], chord);
      sse += d * d;
    }
    records.push_back({cluster_id, k, points[kept[k]], points[kept[k + 1]], sse,
                       kept[k + 1] - kept[k] + 1});
  }
  return records;
}

inline void writeTextFile(const std::filesystem::path& path, const std::string& text,
                          Stage stage) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw StageError(stage, "cannot write " + path.string());
  }
  out << text;
  if (!out.flush()) {
    throw StageError(stage, "write failed for " + path.string());
  }
}

template <int D>
PipelineReport runPipelineT(const PipelineConfig& config) {
  PipelineReport report;

  // ingest
  std::vector<VectorND<D, double>> points;
  try {
    if (config.format == PointFormat::Csv) {
      points = readCsvPoints<D>(config.input_path);
    } else {
      if constexpr (D == 3) {
        points = readPlyPoints(config.input_path);
      } else {
        throw IngestError("ply input requires dim 3");
      }
    }
  } catch (const std::exception& e) {
    throw StageError(Stage::Ingest, e.what());
  }
  if (points.empty()) {
    throw StageError(Stage::Ingest, "no points in " + config.input_path);
  }
  report.point_count = points.size();

  // segment
  std::vector<Cluster<D, double>> clusters;
  try {
    clusters = segmentScan(points, config.segmentation, config.circular);
  } catch (const std::exception& e) {
    throw StageError(Stage::Segment, e.what());
  }
  for (const auto& cluster : clusters) {
    (cluster.is_outlier ? report.outlier_count : report.cluster_count) += 1;
  }

  // vectorize
  std::vector<SegmentRecord<D>> records;
  try {
    for (std::size_t id = 0; id < clusters.size(); ++id) {
      if (clusters[id].is_outlier) {
        continue;
      }
      auto cluster_records = vectorizeCluster<D>(clusters[id].points, id, config);
      records.insert(records.end(), cluster_records.begin(), cluster_records.end());
    }
  } catch (const std::exception& e) {
    throw StageError(Stage::Vectorize, e.what());
  }
  report.segment_count = records.size();

  // export
  try {
    if (!config.out_csv.empty()) {
      writeTextFile(config.out_csv, segmentsCsv<D>(records), Stage::Export);
      report.written.push_back(config.out_csv);
    }
    if (!config.out_tex.empty()) {
      TexDocument doc;
      if constexpr (D == 2) {
        Figure2D figure;
        std::size_t color_index = 0;
        for (const auto& cluster : clusters) {
          Style style;
          style.marker = Marker::Dot;
          style.color = cluster.is_outlier ? Color::black()
                                           : clusterColor(color_index++);
          figure.addPoints(cluster.points, style);
        }
        for (const auto& rec : records) {
          Style style;
          style.color = Color::black();
          style.line_width = 0.8;
          figure.addSegment(LineSegment2d(rec.from, rec.to), style);
        }
        doc.addFigure(std::move(figure), "Segmented and vectorized point cloud");
      } else {
        Scene3D scene;
        std::size_t color_index = 0;
        for (const auto& cluster : clusters) {
          Style style;
          style.marker = Marker::Dot;
          style.color = cluster.is_outlier ? Color::black()
                                           : clusterColor(color_index++);
          scene.addPoints(cluster.points, style);
        }
        for (const auto& rec : records) {
          Style style;
          style.color = Color::black();
          style.line_width = 0.8;
          scene.addSegment(LineSegment3d(rec.from, rec.to), style);
        }
        doc.addScene(std::move(scene), "Segmented and vectorized point cloud");
      }
      exportDocument(doc, config.out_tex);
      report.written.push_back(config.out_tex);

      if (config.compile) {
        report.compile_status = compileDocument(config.out_tex, config.latex_cmd);
        if (!report.compile_status.ok && !report.compile_status.skipped) {
          throw StageError(Stage::Export,
                           report.compile_status.reason + "\n" +
                               report.compile_status.log_tail);
        }
      }
    }
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(Stage::Export, e.what());
  }

  return report;
}

}  // namespace detail

/// Runs ingest -> segment -> vectorize -> export per the configuration.
/// Throws StageError tagged with the failing stage.
inline PipelineReport runPipeline(const PipelineConfig& config) {
  config.validate();
  return config.dim == 2 ? detail::runPipelineT<2>(config)
                         : detail::runPipelineT<3>(config);
}

}  // namespace rtl

#endif  // RTL_IO_PIPELINE_HPP
