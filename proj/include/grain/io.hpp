#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "grain/errors.hpp"
#include "grain/grain_stream.hpp"

namespace grain {

inline constexpr const char* tool_version = "grainsim 0.1.0";

// parsed form of the structured text configuration; every field has a
// usable default so a rendered config always shows the full schema
struct RunConfig {
  // model block
  double alpha = 1.5;
  double p = 0.5;
  double r_min = 1.0;
  std::string grain = "square";  // square | disk

  // scenario block
  std::string kind = "field";  // field | workload
  double gamma = 1.0;
  double beta = std::numeric_limits<double>::infinity();
  double T = 0.0;  // workload horizon; 0 means not set
  std::vector<double> lambdas;
  std::vector<double> xs = {1.0};
  std::vector<double> ys = {1.0};
  std::vector<double> t_lags;
  std::vector<double> s_lags;

  // execution block
  std::uint64_t seed = 1;
  std::uint64_t replicates = 100;
  int threads = 0;  // 0 = use available parallelism
  std::uint64_t budget = default_grain_budget;

  // output block
  std::string directory = ".";
  std::string format = "csv";
};

// text format: [section] headers, key = value lines, '#' comments; lists
// are whitespace separated; unknown sections or keys are rejected
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);
std::string render_run_config(const RunConfig& config);

// output directory after the GRAINSIM_OUTPUT_DIR override
std::string resolve_output_directory(const RunConfig& config);

// shortest decimal form that round-trips to the same double
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> preamble;  // written with a leading "# "
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

}  // namespace grain
