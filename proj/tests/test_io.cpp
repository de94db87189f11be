#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "grain/errors.hpp"
#include "grain/io.hpp"

using namespace grain;

TEST_SUITE("configuration and tables") {

TEST_CASE("config round trip") {
  RunConfig config;
  config.alpha = 1.9;
  config.p = 0.25;
  config.r_min = 0.001;
  config.grain = "disk";
  config.kind = "workload";
  config.gamma = 2.5;
  config.beta = 0.4;
  config.T = 512.0;
  config.lambdas = {16.0, 64.0, 256.0};
  config.xs = {0.5, 1.0};
  config.ys = {2.0};
  config.t_lags = {1.0, 2.0, 4.0};
  config.seed = 987654321;
  config.replicates = 2500;
  config.threads = 4;
  config.directory = "/tmp/out";

  RunConfig back = parse_run_config(render_run_config(config));
  CHECK(back.alpha == config.alpha);
  CHECK(back.p == config.p);
  CHECK(back.r_min == config.r_min);
  CHECK(back.grain == config.grain);
  CHECK(back.kind == config.kind);
  CHECK(back.gamma == config.gamma);
  CHECK(back.beta == config.beta);
  CHECK(back.T == config.T);
  CHECK(back.lambdas == config.lambdas);
  CHECK(back.xs == config.xs);
  CHECK(back.ys == config.ys);
  CHECK(back.t_lags == config.t_lags);
  CHECK(back.s_lags == config.s_lags);
  CHECK(back.seed == config.seed);
  CHECK(back.replicates == config.replicates);
  CHECK(back.threads == config.threads);
  CHECK(back.directory == config.directory);
}

TEST_CASE("infinite beta renders and parses") {
  RunConfig config;
  CHECK(std::isinf(config.beta));
  RunConfig back = parse_run_config(render_run_config(config));
  CHECK(std::isinf(back.beta));
}

TEST_CASE("unknown sections and keys are rejected") {
  CHECK_THROWS_AS(parse_run_config("[nonsense]\nalpha = 1.5\n"), Error);
  CHECK_THROWS_AS(parse_run_config("[model]\nwidget = 3\n"), Error);
  CHECK_THROWS_AS(parse_run_config("[model]\nalpha = frog\n"), Error);
}

TEST_CASE("comments and blank lines are ignored") {
  RunConfig back = parse_run_config(
      "# top note\n\n[model]\n# mid note\nalpha = 1.25\n");
  CHECK(back.alpha == 1.25);
}

TEST_CASE("doubles render in shortest round-trip form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-3.5) == "-3.5");
  double third = 1.0 / 3.0;
  CHECK(std::stod(format_double(third)) == third);
  double awkward = 6.432386720440746;
  CHECK(std::stod(format_double(awkward)) == awkward);
}

TEST_CASE("csv write and read round trip") {
  CsvTable table;
  table.preamble = {"grainsim test", "two rows"};
  table.columns = {"lambda", "value"};
  table.rows = {{16.0, 1.0 / 3.0}, {64.0, -2.5}};
  const std::string path = "io_roundtrip_test.csv";
  write_csv(path, table);
  CsvTable back = read_csv(path);
  std::remove(path.c_str());
  CHECK(back.preamble == table.preamble);
  CHECK(back.columns == table.columns);
  REQUIRE(back.rows.size() == 2);
  // numeric payload survives exactly thanks to round-trip formatting
  CHECK(back.rows[0][0] == 16.0);
  CHECK(back.rows[0][1] == 1.0 / 3.0);
  CHECK(back.rows[1][1] == -2.5);
}

TEST_CASE("output directory override") {
  RunConfig config;
  config.directory = "/tmp/a";
  CHECK(resolve_output_directory(config) == "/tmp/a");
  setenv("GRAINSIM_OUTPUT_DIR", "/tmp/b", 1);
  CHECK(resolve_output_directory(config) == "/tmp/b");
  unsetenv("GRAINSIM_OUTPUT_DIR");
  CHECK(resolve_output_directory(config) == "/tmp/a");
}

}  // TEST_SUITE
