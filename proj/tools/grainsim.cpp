// Command line front end: classification, simulation, covariance and limit
// sampling for the anisotropic grain occupation field, plus the workload
// aggregation scenario and the verification suites.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "grain/chf.hpp"
#include "grain/constants.hpp"
#include "grain/covariance.hpp"
#include "grain/errors.hpp"
#include "grain/exponents.hpp"
#include "grain/field.hpp"
#include "grain/grain_stream.hpp"
#include "grain/io.hpp"
#include "grain/limits.hpp"
#include "grain/parallel.hpp"
#include "grain/params.hpp"
#include "grain/rng.hpp"
#include "grain/stats.hpp"
#include "grain/verify.hpp"
#include "grain/workload.hpp"

namespace {

using grain::RunConfig;

// Options are staged next to the parsed RunConfig: a configuration file (if
// any) is loaded first and individual flags override only the fields the
// user actually passed.
class ConfigBinder {
 public:
  explicit ConfigBinder(CLI::App* cmd) : cmd_(cmd) {
    cmd->add_option("--config", config_path_,
                    "run configuration file; flags override its fields");
  }

  template <class T>
  void bind(const std::string& flag, T RunConfig::*field,
            const std::string& help) {
    auto holder = std::make_shared<T>();
    CLI::Option* opt = cmd_->add_option(flag, *holder, help);
    appliers_.push_back([opt, holder, field](RunConfig& config) {
      if (opt->count() > 0) config.*field = *holder;
    });
  }

  RunConfig resolve() const {
    RunConfig config;
    if (!config_path_.empty()) config = grain::load_run_config(config_path_);
    for (const auto& apply : appliers_) apply(config);
    return config;
  }

 private:
  CLI::App* cmd_;
  std::string config_path_;
  std::vector<std::function<void(RunConfig&)>> appliers_;
};

void add_model_options(ConfigBinder& b) {
  b.bind("--alpha", &RunConfig::alpha, "size tail exponent, in (1,2)");
  b.bind("--p", &RunConfig::p, "anisotropy exponent, in (0,1)");
  b.bind("--r-min", &RunConfig::r_min, "lower cutoff of the size law");
  b.bind("--grain", &RunConfig::grain, "grain shape: square | disk");
}

void add_exec_options(ConfigBinder& b) {
  b.bind("--seed", &RunConfig::seed, "base seed; replicate i uses stream i");
  b.bind("--replicates", &RunConfig::replicates, "number of replicates");
  b.bind("--threads", &RunConfig::threads,
         "worker threads (0 = all available)");
  b.bind("--budget", &RunConfig::budget, "grain budget per replicate");
  b.bind("--out", &RunConfig::directory, "output directory");
}

grain::ModelParams params_from(const RunConfig& config) {
  grain::ModelParams params;
  params.alpha = config.alpha;
  params.p = config.p;
  params.r_min = config.r_min;
  if (config.grain == "square") {
    params.shape = grain::GrainShape::unit_square();
  } else if (config.grain == "disk") {
    params.shape = grain::GrainShape::unit_disk();
  } else {
    throw grain::BadGrain("grain must be 'square' or 'disk', got '" +
                          config.grain + "'");
  }
  return params;
}

int resolve_threads(const RunConfig& config) {
  if (config.threads > 0) return config.threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::string num(double v) { return grain::format_double(v); }

// every table goes out with the fully resolved configuration beside it, so
// a run can be repeated from its artifacts alone
void emit(const RunConfig& config, const std::string& stem,
          const grain::CsvTable& table) {
  std::string dir = grain::resolve_output_directory(config);
  std::string csv_path = dir + "/" + stem + ".csv";
  grain::write_csv(csv_path, table);
  std::ofstream out(dir + "/" + stem + ".config");
  if (!out) throw grain::Error("cannot write config echo in '" + dir + "'");
  out << grain::render_run_config(config);
  std::cout << "wrote " << csv_path << " (" << table.rows.size() << " rows)\n";
}

std::string field_constant_line(const grain::ModelParams& params,
                                const grain::FieldRegime& regime,
                                double gamma) {
  using grain::FieldFamily;
  switch (regime.family) {
    case FieldFamily::StableSheet:
      return " scale_pow_alpha=" + num(grain::sigma_alpha(params));
    case FieldFamily::StableSlidePlus:
      return " scale_pow_index=" + num(grain::sigma_alpha_plus(params));
    case FieldFamily::StableSlideMinus: {
      auto m = grain::reflect_params(params, gamma);
      return " scale_pow_index=" + num(grain::sigma_alpha_plus(m.params));
    }
    case FieldFamily::FbsPlus:
      return " sigma_sq=" + num(grain::sigma_plus_sq(params));
    case FieldFamily::FbsMinus: {
      auto m = grain::reflect_params(params, gamma);
      return " sigma_sq=" + num(grain::sigma_plus_sq(m.params));
    }
    case FieldFamily::FbsLogPlus:
      return " sigma_sq=" + num(grain::sigma_tilde_plus_sq(params, gamma));
    case FieldFamily::FbsLogMinus: {
      auto m = grain::reflect_params(params, gamma);
      return " sigma_sq=" +
             num(grain::sigma_tilde_plus_sq(m.params, m.gamma));
    }
    default:
      return "";
  }
}

void run_classify(const RunConfig& config, double beta, bool beta_given) {
  grain::ModelParams params = params_from(config);
  grain::CriticalExponents c = grain::critical_exponents(params);
  std::cout << "critical: gamma_minus=" << num(c.gamma_minus)
            << " gamma_plus=" << num(c.gamma_plus)
            << " alpha_plus=" << num(c.alpha_plus)
            << " alpha_minus=" << num(c.alpha_minus) << "\n";
  if (!(config.p < 1.0)) {
    // vertical extents degenerate at p = 1; only the workload regimes are
    // defined there
    std::cout << "field: undefined at p=1\n";
  } else {
    grain::FieldRegime regime =
        grain::classify_field_regime(params, config.gamma);
    std::cout << "field: " << grain::family_name(regime.family)
              << " H=" << num(regime.H)
              << (regime.log_correction ? " log" : "");
    if (regime.stable_index > 0.0)
      std::cout << " stable_index=" << num(regime.stable_index);
    if (regime.hurst_x > 0.0 || regime.hurst_y > 0.0)
      std::cout << " hurst=(" << num(regime.hurst_x) << ","
                << num(regime.hurst_y) << ")";
    std::cout << field_constant_line(params, regime, config.gamma) << "\n";
  }
  if (beta_given) {
    grain::WorkloadRegime w =
        grain::classify_workload_regime(params, config.gamma, beta);
    std::cout << "workload: " << grain::workload_family_name(w.family)
              << " H=" << num(w.script_H) << (w.log_correction ? " log" : "");
    if (w.constants.sigma_sq > 0.0)
      std::cout << " sigma_sq=" << num(w.constants.sigma_sq);
    if (w.constants.stable_index > 0.0)
      std::cout << " stable_index=" << num(w.constants.stable_index)
                << " scale=" << num(w.constants.stable_scale);
    if (w.constants.hurst > 0.0)
      std::cout << " hurst=" << num(w.constants.hurst);
    std::cout << "\n";
  }
}

void run_simulate_field(const RunConfig& config) {
  grain::ModelParams params = params_from(config);
  if (config.lambdas.empty())
    throw grain::Error("simulate-field needs --lambdas (all > 1)");
  for (double lam : config.lambdas)
    if (!(lam > 1.0))
      throw grain::Error("lambdas must be > 1, got " + num(lam));
  if (config.xs.empty() || config.ys.empty())
    throw grain::Error("simulate-field needs one x and one y");
  double x = config.xs.front(), y = config.ys.front();
  grain::FieldRegime regime =
      grain::classify_field_regime(params, config.gamma);
  int threads = resolve_threads(config);
  grain::CsvTable table;
  table.preamble.push_back(std::string(grain::tool_version));
  table.preamble.push_back(
      "field family " + std::string(grain::family_name(regime.family)) +
      " H=" + num(regime.H) + (regime.log_correction ? " log" : ""));
  table.columns = {"lambda", "rep", "S", "normalized"};
  for (double lam : config.lambdas) {
    std::vector<double> values = grain::simulate_S_batch(
        params, lam, config.gamma, x, y,
        static_cast<std::size_t>(config.replicates), config.seed, threads,
        config.budget);
    double norm = grain::field_normalization(regime, lam);
    for (std::size_t rep = 0; rep < values.size(); ++rep)
      table.rows.push_back({lam, static_cast<double>(rep), values[rep],
                            values[rep] / norm});
  }
  emit(config, "field", table);
}

void run_scan_gamma(const RunConfig& config, double lo, double hi,
                    std::size_t points) {
  grain::ModelParams params = params_from(config);
  grain::CriticalExponents c = grain::critical_exponents(params);
  if (!(lo > 0.0)) lo = 0.25 * c.gamma_minus;
  if (!(hi > lo)) hi = 2.0 * c.gamma_plus;
  if (points < 2) points = 2;
  std::vector<double> gammas;
  for (std::size_t i = 0; i < points; ++i)
    gammas.push_back(lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(points - 1));
  // always include the two critical aspects exactly
  gammas.push_back(c.gamma_minus);
  gammas.push_back(c.gamma_plus);
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  grain::CsvTable table;
  table.preamble.push_back(std::string(grain::tool_version));
  for (int f = 0; f < 9; ++f)
    table.preamble.push_back(
        "family " + std::to_string(f) + " = " +
        grain::family_name(static_cast<grain::FieldFamily>(f)));
  table.columns = {"gamma", "family", "H",       "log",
                   "stable_index",    "hurst_x", "hurst_y"};
  for (double g : gammas) {
    grain::FieldRegime regime = grain::classify_field_regime(params, g);
    table.rows.push_back({g, static_cast<double>(regime.family), regime.H,
                          regime.log_correction ? 1.0 : 0.0,
                          regime.stable_index, regime.hurst_x,
                          regime.hurst_y});
  }
  emit(config, "gamma_scan", table);
}

void run_covariance(const RunConfig& config) {
  grain::ModelParams params = params_from(config);
  std::vector<grain::CovarianceLag> lags;
  for (double t : config.t_lags) lags.push_back({t, 0.0});
  for (double s : config.s_lags) lags.push_back({0.0, s});
  if (lags.empty()) lags = {{1.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}, {0.0, 1.0}};
  auto estimates = grain::empirical_covariance(
      params, lags, static_cast<std::size_t>(config.replicates), config.seed,
      resolve_threads(config));
  grain::CsvTable table;
  table.preamble.push_back(std::string(grain::tool_version));
  table.columns = {"dt", "ds", "exact", "estimate", "se", "pairs"};
  for (const auto& e : estimates)
    table.rows.push_back({e.dt, e.ds, e.exact, e.estimate, e.se,
                          static_cast<double>(e.pairs)});
  emit(config, "covariance", table);
}

// Draws from the scaling-limit process of the classified regime on the xs
// times ys grid.  Regimes below the lower critical aspect are sampled
// through the diagonal mirror: the limit there is the transposed limit of
// the reflected model.
void run_limit_sample(const RunConfig& config) {
  using grain::FieldFamily;
  grain::ModelParams params = params_from(config);
  const std::vector<double>& xs = config.xs;
  const std::vector<double>& ys = config.ys;
  std::size_t nx = xs.size(), ny = ys.size();
  if (nx == 0 || ny == 0)
    throw grain::Error("limit-sample needs non-empty --xs and --ys");
  grain::FieldRegime regime =
      grain::classify_field_regime(params, config.gamma);
  auto mirror = grain::reflect_params(params, config.gamma);
  grain::CsvTable table;
  table.preamble.push_back(std::string(grain::tool_version));
  table.preamble.push_back(
      "limit family " + std::string(grain::family_name(regime.family)) +
      " H=" + num(regime.H) + (regime.log_correction ? " log" : ""));
  table.columns = {"rep", "x", "y", "value"};
  for (std::size_t rep = 0; rep < config.replicates; ++rep) {
    grain::SeededStream rng(config.seed, rep);
    // value(i, j) on the xs-outer grid
    std::function<double(std::size_t, std::size_t)> value;
    std::vector<double> vals, line;
    double scale = 1.0;
    switch (regime.family) {
      case FieldFamily::StableSheet: {
        double sigma =
            std::pow(grain::sigma_alpha(params), 1.0 / params.alpha);
        vals = grain::sample_stable_sheet(params.alpha, sigma, 1.0, xs, ys,
                                          rng);
        value = [&](std::size_t i, std::size_t j) { return vals[i * ny + j]; };
        break;
      }
      case FieldFamily::IntermediatePlus: {
        vals = grain::sample_intermediate_plus(params, xs, ys, rng);
        value = [&](std::size_t i, std::size_t j) { return vals[i * ny + j]; };
        break;
      }
      case FieldFamily::IntermediateMinus: {
        vals = grain::sample_intermediate_plus(mirror.params, ys, xs, rng);
        value = [&](std::size_t i, std::size_t j) { return vals[j * nx + i]; };
        break;
      }
      case FieldFamily::FbsPlus: {
        scale = std::sqrt(grain::sigma_plus_sq(params));
        vals = grain::sample_fbs(regime.hurst_x, regime.hurst_y, xs, ys, rng);
        value = [&](std::size_t i, std::size_t j) {
          return scale * vals[i * ny + j];
        };
        break;
      }
      case FieldFamily::FbsLogPlus: {
        scale = std::sqrt(grain::sigma_tilde_plus_sq(params, config.gamma));
        vals = grain::sample_fbs(regime.hurst_x, regime.hurst_y, xs, ys, rng);
        value = [&](std::size_t i, std::size_t j) {
          return scale * vals[i * ny + j];
        };
        break;
      }
      case FieldFamily::FbsMinus: {
        scale = std::sqrt(grain::sigma_plus_sq(mirror.params));
        vals = grain::sample_fbs(regime.hurst_y, regime.hurst_x, ys, xs, rng);
        value = [&](std::size_t i, std::size_t j) {
          return scale * vals[j * nx + i];
        };
        break;
      }
      case FieldFamily::FbsLogMinus: {
        scale = std::sqrt(
            grain::sigma_tilde_plus_sq(mirror.params, mirror.gamma));
        vals = grain::sample_fbs(regime.hurst_y, regime.hurst_x, ys, xs, rng);
        value = [&](std::size_t i, std::size_t j) {
          return scale * vals[j * nx + i];
        };
        break;
      }
      case FieldFamily::StableSlidePlus: {
        double index = regime.stable_index;
        line = grain::sample_stable_line(
            index, std::pow(grain::sigma_alpha_plus(params), 1.0 / index),
            1.0, ys, rng);
        value = [&](std::size_t i, std::size_t j) { return xs[i] * line[j]; };
        break;
      }
      case FieldFamily::StableSlideMinus: {
        double index = regime.stable_index;
        line = grain::sample_stable_line(
            index,
            std::pow(grain::sigma_alpha_plus(mirror.params), 1.0 / index),
            1.0, xs, rng);
        value = [&](std::size_t i, std::size_t j) { return ys[j] * line[i]; };
        break;
      }
    }
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j)
        table.rows.push_back({static_cast<double>(rep), xs[i], ys[j],
                              value(i, j)});
  }
  emit(config, "limit", table);
}

void run_workload(const RunConfig& config) {
  grain::ModelParams params = params_from(config);
  if (!(config.T > 1.0))
    throw grain::Error("workload needs --T > 1");
  grain::WorkloadConfig wc;
  wc.T = config.T;
  wc.gamma = config.gamma;
  wc.beta = config.beta;
  wc.xs = config.xs;
  wc.budget = config.budget;
  grain::WorkloadRegime regime =
      grain::classify_workload_regime(params, wc.gamma, wc.beta);
  std::size_t reps = static_cast<std::size_t>(config.replicates);
  std::vector<std::vector<double>> raw(reps), norm(reps);
  grain::parallel_replicates(reps, resolve_threads(config),
                             [&](std::size_t rep) {
                               grain::SeededStream rng(config.seed, rep);
                               raw[rep] =
                                   grain::simulate_workload(params, wc, rng);
                               norm[rep] = grain::normalize_workload(
                                   params, wc, regime, raw[rep]);
                             });
  grain::CsvTable table;
  table.preamble.push_back(std::string(grain::tool_version));
  table.preamble.push_back(
      "workload family " +
      std::string(grain::workload_family_name(regime.family)) +
      " H=" + num(regime.script_H) + (regime.log_correction ? " log" : ""));
  table.columns = {"rep", "x", "A", "normalized"};
  for (std::size_t rep = 0; rep < reps; ++rep)
    for (std::size_t k = 0; k < wc.xs.size(); ++k)
      table.rows.push_back({static_cast<double>(rep), wc.xs[k], raw[rep][k],
                            norm[rep][k]});
  emit(config, "workload", table);
}

int run_verify(const RunConfig& config, const std::string& suite,
               int criterion) {
  grain::VerifyOptions options;
  options.suite = suite;
  options.seed = config.seed;
  options.threads = resolve_threads(config);
  options.criterion = criterion;
  std::vector<grain::CheckResult> results = grain::run_suite(options);
  int failed = 0, expected = 0;
  for (const auto& r : results) {
    const char* status = r.passed          ? "pass         "
                         : r.expected_fail ? "expected-fail"
                                           : "FAIL         ";
    if (!r.passed && !r.expected_fail) ++failed;
    if (!r.passed && r.expected_fail) ++expected;
    std::cout << "[" << status << "] " << r.name << " ("
              << num(r.seconds) << " s) observed=" << num(r.observed)
              << " bound=" << num(r.bound) << "\n";
    if (!r.detail.empty()) std::cout << "    " << r.detail << "\n";
  }
  std::cout << results.size() << " checks, " << failed << " failed, "
            << expected << " expected failures\n";
  emit(config, "verify", grain::results_table(results));
  return grain::suite_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anisotropic heavy-tailed grain field toolkit"};
  app.require_subcommand(1);
  std::vector<std::unique_ptr<ConfigBinder>> binders;
  int exit_code = 0;

  auto make_binder = [&](CLI::App* cmd) {
    binders.push_back(std::make_unique<ConfigBinder>(cmd));
    return binders.back().get();
  };

  {
    CLI::App* cmd = app.add_subcommand(
        "classify", "print the scaling regime of a parameter point");
    ConfigBinder* b = make_binder(cmd);
    add_model_options(*b);
    b->bind("--gamma", &RunConfig::gamma, "window aspect exponent");
    auto beta = std::make_shared<double>(0.0);
    CLI::Option* beta_opt = cmd->add_option(
        "--beta", *beta, "rate cap exponent; also prints the workload regime");
    cmd->callback([b, beta, beta_opt] {
      run_classify(b->resolve(), *beta, beta_opt->count() > 0);
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "simulate-field", "centered window integrals across scales");
    ConfigBinder* b = make_binder(cmd);
    add_model_options(*b);
    add_exec_options(*b);
    b->bind("--gamma", &RunConfig::gamma, "window aspect exponent");
    b->bind("--lambdas", &RunConfig::lambdas, "scales to simulate (> 1)");
    b->bind("--xs", &RunConfig::xs, "window corner x (first entry used)");
    b->bind("--ys", &RunConfig::ys, "window corner y (first entry used)");
    cmd->callback([b] { run_simulate_field(b->resolve()); });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "scan-gamma", "regime atlas slice across window aspects");
    ConfigBinder* b = make_binder(cmd);
    add_model_options(*b);
    b->bind("--out", &RunConfig::directory, "output directory");
    auto lo = std::make_shared<double>(0.0);
    auto hi = std::make_shared<double>(0.0);
    auto points = std::make_shared<std::size_t>(200);
    cmd->add_option("--gamma-min", *lo, "scan start (default gamma_minus/4)");
    cmd->add_option("--gamma-max", *hi, "scan end (default 2 gamma_plus)");
    cmd->add_option("--points", *points, "number of scan points");
    cmd->callback(
        [b, lo, hi, points] { run_scan_gamma(b->resolve(), *lo, *hi, *points); });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "covariance", "empirical vs exact covariance at the given lags");
    ConfigBinder* b = make_binder(cmd);
    add_model_options(*b);
    add_exec_options(*b);
    b->bind("--t-lags", &RunConfig::t_lags, "horizontal lags");
    b->bind("--s-lags", &RunConfig::s_lags, "vertical lags");
    cmd->callback([b] { run_covariance(b->resolve()); });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "limit-sample", "draw from the classified scaling limit");
    ConfigBinder* b = make_binder(cmd);
    add_model_options(*b);
    add_exec_options(*b);
    b->bind("--gamma", &RunConfig::gamma, "window aspect exponent");
    b->bind("--xs", &RunConfig::xs, "grid x coordinates");
    b->bind("--ys", &RunConfig::ys, "grid y coordinates");
    cmd->callback([b] { run_limit_sample(b->resolve()); });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "workload", "aggregate session workload across a horizon");
    ConfigBinder* b = make_binder(cmd);
    add_model_options(*b);
    add_exec_options(*b);
    b->bind("--gamma", &RunConfig::gamma, "arrival intensity exponent");
    b->bind("--beta", &RunConfig::beta, "rate cap exponent (inf = uncapped)");
    b->bind("--T", &RunConfig::T, "horizon scale");
    b->bind("--xs", &RunConfig::xs, "observation points");
    cmd->callback([b] { run_workload(b->resolve()); });
  }
  {
    CLI::App* cmd =
        app.add_subcommand("verify", "run a verification suite");
    ConfigBinder* b = make_binder(cmd);
    add_exec_options(*b);
    auto suite = std::make_shared<std::string>("fast-smoke");
    auto criterion = std::make_shared<int>(0);
    cmd->add_option("--suite", *suite, "fast-smoke | acceptance | full");
    cmd->add_option("--criterion", *criterion,
                    "run a single acceptance criterion (1..12)");
    cmd->callback([b, suite, criterion, &exit_code] {
      exit_code = run_verify(b->resolve(), *suite, *criterion);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return grain::exit_code_for(e);
  }
  return exit_code;
}
