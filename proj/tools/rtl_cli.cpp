// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT
//
// Command-line front end: point-cloud processing pipelines and the
// vectorization benchmark.

#include <cstdio>
#include <exception>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rtl/io/pipeline.hpp"
#include "rtl/vectorization/benchmark.hpp"

namespace {

/// Flat key=value config file; keys mirror the long flag names. Values are
/// applied only where the command line did not already set the option.
void applyConfigFile(const std::string& path, CLI::App& pipeline,
                     rtl::PipelineConfig& config, std::string& format,
                     std::string& vectorizer, bool& dim_given) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file " + path);
  }

  const auto unset = [&](const std::string& flag) {
    return pipeline.get_option(flag)->count() == 0;
  };
  const auto parseBool = [](const std::string& v) {
    return v == "1" || v == "true" || v == "yes" || v == "on";
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                               ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);

    if (key == "input") {
      if (unset("--input")) config.input_path = value;
    } else if (key == "format") {
      if (unset("--format")) format = value;
    } else if (key == "dim") {
      if (unset("--dim")) {
        config.dim = std::stoi(value);
        dim_given = true;
      }
    } else if (key == "eps-min") {
      if (unset("--eps-min")) config.segmentation.eps_min = std::stod(value);
    } else if (key == "rel-factor") {
      if (unset("--rel-factor")) config.segmentation.rel_factor = std::stod(value);
    } else if (key == "min-cluster") {
      if (unset("--min-cluster"))
        config.segmentation.min_cluster_size = std::stoul(value);
    } else if (key == "circular") {
      if (unset("--circular")) config.circular = parseBool(value);
    } else if (key == "vectorizer") {
      if (unset("--vectorizer")) vectorizer = value;
    } else if (key == "sigma-max") {
      if (unset("--sigma-max")) config.sigma_max = std::stod(value);
    } else if (key == "tol") {
      if (unset("--tol")) config.tol = std::stod(value);
    } else if (key == "out-tex") {
      if (unset("--out-tex")) config.out_tex = value;
    } else if (key == "out-csv") {
      if (unset("--out-csv")) config.out_csv = value;
    } else if (key == "seed") {
      if (unset("--seed")) config.seed = std::stoull(value);
    } else if (key == "latex-cmd") {
      if (unset("--latex-cmd")) config.latex_cmd = value;
    } else if (key == "compile") {
      if (unset("--compile")) config.compile = parseBool(value);
    } else {
      throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                               ": unknown key '" + key + "'");
    }
  }
}

int runPipelineCommand(const rtl::PipelineConfig& config) {
  try {
    const rtl::PipelineReport report = rtl::runPipeline(config);
    std::printf("points: %zu, clusters: %zu (+%zu outliers), segments: %zu\n",
                report.point_count, report.cluster_count, report.outlier_count,
                report.segment_count);
    for (const auto& path : report.written) {
      std::printf("wrote %s\n", path.c_str());
    }
    if (config.compile) {
      if (report.compile_status.skipped) {
        std::printf("compile %s\n", report.compile_status.reason.c_str());
      } else if (report.compile_status.ok) {
        std::printf("compiled %s\n", config.out_tex.c_str());
      }
    }
    return 0;
  } catch (const rtl::StageError& e) {
    std::fprintf(stderr, "error [%s]: %s\n", rtl::stageName(e.stage()), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error [config]: %s\n", e.what());
    return 1;
  }
}

int runBenchCommand(const std::string& shape, const std::vector<std::size_t>& sizes,
                    const std::vector<std::string>& algorithms, double sigma_max,
                    double tol, double noise, std::uint64_t seed,
                    const std::string& output, const std::string& out_tex) {
  try {
    rtl::BenchmarkConfig config;
    config.shape = rtl::parseShape(shape);
    config.sizes = sizes;
    for (const auto& name : algorithms) {
      config.algorithms.push_back(rtl::parseAlgorithm(name));
    }
    config.sigma_max = sigma_max;
    config.tol = tol;
    config.noise_sigma = noise;
    config.seed = seed;

    const auto rows = rtl::runBenchmark(config);
    const std::string csv = rtl::benchmarkCsv(rows);
    if (output.empty()) {
      std::fputs(csv.c_str(), stdout);
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        throw std::runtime_error("cannot write " + output);
      }
      out << csv;
      std::printf("wrote %s\n", output.c_str());
    }
    if (!out_tex.empty()) {
      rtl::TexDocument doc;
      doc.addTable(rtl::benchmarkTable(rows), "Vectorization benchmark");
      rtl::exportDocument(doc, out_tex);
      std::printf("wrote %s\n", out_tex.c_str());
    }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error [bench]: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rtl point-cloud processing toolkit"};
  app.require_subcommand(1);

  // pipeline: ingest -> segment -> vectorize -> export
  auto* pipeline = app.add_subcommand(
      "pipeline", "Segment a point cloud and vectorize its clusters");
  rtl::PipelineConfig config;
  std::string format = "csv";
  std::string vectorizer = "ftls";
  std::string config_file;
  pipeline->add_option("--config", config_file,
                       "Config file (flat key=value; flags win)");
  pipeline->add_option("--input", config.input_path, "Input point file");
  pipeline->add_option("--format", format, "Input format: csv, ply-ascii");
  pipeline->add_option("--dim", config.dim, "Point dimension: 2 or 3");
  pipeline->add_option("--eps-min", config.segmentation.eps_min,
                       "Absolute gap threshold");
  pipeline->add_option("--rel-factor", config.segmentation.rel_factor,
                       "Range-proportional gap slack");
  pipeline->add_option("--min-cluster", config.segmentation.min_cluster_size,
                       "Minimum cluster size; smaller clusters are outliers");
  pipeline->add_flag("--circular", config.circular,
                     "Treat the scan as a closed ring");
  pipeline->add_option("--vectorizer", vectorizer,
                       "Algorithm: ftls, ftls-global, dp, rw");
  pipeline->add_option("--sigma-max", config.sigma_max,
                       "FTLS RMS acceptance threshold");
  pipeline->add_option("--tol", config.tol, "DP/RW tolerance");
  pipeline->add_option("--out-tex", config.out_tex, "LaTeX figure output path");
  pipeline->add_option("--out-csv", config.out_csv, "Segment CSV output path");
  pipeline->add_option("--seed", config.seed, "Random seed");
  pipeline->add_option("--latex-cmd", config.latex_cmd,
                       "LaTeX compiler (default pdflatex, env RTL_LATEX_CMD)");
  pipeline->add_flag("--compile", config.compile,
                     "Compile the exported figure document");

  // bench: vectorization speed benchmark
  auto* bench = app.add_subcommand("bench", "Vectorization speed benchmark");
  std::string shape = "semicircle";
  std::vector<std::size_t> sizes{1000, 10000};
  std::vector<std::string> algorithms{"ftls", "dp", "rw"};
  double sigma_max = 0.05;
  double tol = 0.05;
  double noise = 0.01;
  std::uint64_t seed = 1;
  std::string output;
  std::string bench_tex;
  bench->add_option("--shape", shape, "semicircle, l-shape, square, helix");
  bench->add_option("--sizes", sizes, "Cloud sizes")->delimiter(',');
  bench->add_option("--algorithms", algorithms, "ftls, ftls-global, dp, rw")
      ->delimiter(',');
  bench->add_option("--sigma-max", sigma_max, "FTLS RMS acceptance threshold");
  bench->add_option("--tol", tol, "DP/RW tolerance");
  bench->add_option("--noise", noise, "Gaussian noise sigma");
  bench->add_option("--seed", seed, "Generator seed");
  bench->add_option("--output", output, "CSV output path (default stdout)");
  bench->add_option("--out-tex", bench_tex, "LaTeX table output path");

  CLI11_PARSE(app, argc, argv);

  if (pipeline->parsed()) {
    try {
      bool dim_given = pipeline->get_option("--dim")->count() > 0;
      if (!config_file.empty()) {
        applyConfigFile(config_file, *pipeline, config, format, vectorizer,
                        dim_given);
      }
      if (config.input_path.empty()) {
        throw std::runtime_error("--input is required (flag or config file)");
      }
      config.format = rtl::parseFormat(format);
      config.vectorizer = rtl::parseAlgorithm(vectorizer);
      if (config.format == rtl::PointFormat::PlyAscii && !dim_given) {
        config.dim = 3;  // PLY vertices are x/y/z
      }
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error [config]: %s\n", e.what());
      return 1;
    }
    return runPipelineCommand(config);
  }
  return runBenchCommand(shape, sizes, algorithms, sigma_max, tol, noise, seed,
                         output, bench_tex);
}
