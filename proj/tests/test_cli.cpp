#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rtl/io/ingest.hpp"
#include "rtl/vectorization/shapes.hpp"

using namespace rtl;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult runCli(const std::string& args) {
  const std::string cmd = std::string("'") + RTL_CLI_PATH + "' " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int rc = pclose(pipe);
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::filesystem::path cliDir() {
  const auto dir = std::filesystem::temp_directory_path() / "rtl_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("bench subcommand writes one row per algorithm and size", "[cli]") {
  const auto out = cliDir() / "bench.csv";
  const auto result = runCli(
      "bench --shape semicircle --sizes 1000,10000 --algorithms ftls,dp "
      "--output '" + out.string() + "'");
  CHECK(result.exit_code == 0);

  std::ifstream csv(out);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "algorithm,n,time_us,total_sse,segments");
  int rows = 0;
  while (std::getline(csv, line)) {
    if (!line.empty()) {
      ++rows;
    }
  }
  CHECK(rows == 4);
}

TEST_CASE("bench rejects unknown shapes and algorithms by listing valid ones",
          "[cli]") {
  const auto bad_shape = runCli("bench --shape blob");
  CHECK(bad_shape.exit_code != 0);
  CHECK(bad_shape.output.find("semicircle, l-shape, square, helix") !=
        std::string::npos);

  const auto bad_algo = runCli("bench --algorithms warp");
  CHECK(bad_algo.exit_code != 0);
  CHECK(bad_algo.output.find("ftls, ftls-global, dp, rw") != std::string::npos);
}

TEST_CASE("bench emits a table document on request", "[cli]") {
  const auto tex = cliDir() / "bench_table.tex";
  const auto result = runCli(
      "bench --shape l-shape --sizes 500 --algorithms ftls --out-tex '" +
      tex.string() + "'");
  CHECK(result.exit_code == 0);

  std::ifstream in(tex);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().find("\\begin{tabular}") != std::string::npos);
  CHECK(buffer.str().find("ftls") != std::string::npos);
}

TEST_CASE("pipeline reports stage-tagged errors", "[cli]") {
  const auto missing = runCli("pipeline --input /nonexistent/points.csv");
  CHECK(missing.exit_code != 0);
  CHECK(missing.output.find("error [ingest]") != std::string::npos);

  const auto bad_vectorizer = runCli(
      "pipeline --input whatever.csv --vectorizer quantum");
  CHECK(bad_vectorizer.exit_code != 0);
  CHECK(bad_vectorizer.output.find("error [config]") != std::string::npos);
}

TEST_CASE("pipeline reads flags from a config file, flags winning", "[cli]") {
  const auto input = cliDir() / "line.csv";
  writePointsCsv<2>(input, makeLShape<double>(100, 0.0, 1));
  const auto out_csv = cliDir() / "line_segments.csv";

  const auto config = cliDir() / "pipeline.conf";
  std::ofstream conf(config);
  conf << "input=" << input.string() << "\n";
  conf << "eps-min=0.5\n";
  conf << "sigma-max=0.000001\n";  // overridden by the flag below
  conf.close();

  const auto result = runCli("pipeline --config '" + config.string() +
                             "' --sigma-max 0.02 --out-csv '" + out_csv.string() +
                             "'");
  CHECK(result.exit_code == 0);

  std::ifstream csv(out_csv);
  std::string line;
  int rows = -1;  // skip header
  while (std::getline(csv, line)) {
    if (!line.empty()) {
      ++rows;
    }
  }
  CHECK(rows == 2);  // the flag's threshold, not the config's, was used
}

TEST_CASE("exit status is zero only when all artifacts were written", "[cli]") {
  const auto input = cliDir() / "ok.csv";
  writePointsCsv<2>(input, makeLShape<double>(60, 0.0, 1));

  const auto unwritable = runCli("pipeline --input '" + input.string() +
                                 "' --eps-min 0.5 --out-csv /nonexistent-dir/x.csv");
  CHECK(unwritable.exit_code != 0);
  CHECK(unwritable.output.find("error [export]") != std::string::npos);

  const auto fine = runCli("pipeline --input '" + input.string() +
                           "' --eps-min 0.5 --out-csv '" +
                           (cliDir() / "ok_out.csv").string() + "'");
  CHECK(fine.exit_code == 0);
}
