// Command-line front end: batch solves and verification sweeps over model
// grids, with machine-readable reports.

#include <CLI11.hpp>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twisteq/cli.hpp"

namespace {

using twisteq::cli::CommonOptions;

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config, "flat key = value run configuration");
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--seed", opts.seed, "seed for generated data");
  cmd->add_option("--tol", opts.tol, "residual tolerance");
  cmd->add_option("--truncation", opts.truncation, "oracle window radius");
  cmd->add_option("--threads", opts.threads, "worker threads (0 = default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "twisteq: solutions and obstructions of the twisted coboundary equation "
      "over the geodesic flow, in every irreducible unitary model of SL(2,R)"};
  app.require_subcommand(1);

  CommonOptions solve_opts, bounds_opts, dist_opts, sweep_opts;
  std::string g_file;
  double m_flag = 0.0;
  int one_sided = 0;
  std::string report_dir = "out";

  CLI::App* solve = app.add_subcommand("solve", "solve (X+m)f = g for a data file");
  add_common(solve, solve_opts);
  solve->add_option("--g", g_file, "coefficient vector JSON file")->required();
  CLI::Option* m_opt = solve->add_option("--m", m_flag, "twist parameter");
  CLI::Option* os_opt =
      solve->add_option("--one-sided", one_sided, "one-sided splitting mode n");

  CLI::App* bounds =
      app.add_subcommand("verify-bounds", "certify the coefficient majorants");
  add_common(bounds, bounds_opts);

  CLI::App* dist = app.add_subcommand(
      "verify-distributions",
      "residual identity, coboundary annihilation, truncation convergence");
  add_common(dist, dist_opts);

  CLI::App* sweep =
      app.add_subcommand("sweep", "growth, tame, l2 and functional-norm sweeps");
  add_common(sweep, sweep_opts);

  CLI::App* report = app.add_subcommand("report", "summarize a run directory");
  report->add_option("--out", report_dir, "directory to summarize");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto run = [&](const CommonOptions& opts,
                         int (*cmd)(const twisteq::RunConfig&, std::ostream&)) {
      const twisteq::RunConfig cfg = twisteq::cli::resolve_config(opts);
#ifdef _OPENMP
      if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
      return cmd(cfg, std::cout);
    };
    if (solve->parsed()) {
      const twisteq::RunConfig cfg = twisteq::cli::resolve_config(solve_opts);
#ifdef _OPENMP
      if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
      return twisteq::cli::cmd_solve(
          cfg, g_file, m_opt->count() ? std::optional<double>(m_flag) : std::nullopt,
          os_opt->count() ? std::optional<int>(one_sided) : std::nullopt, std::cout);
    }
    if (bounds->parsed()) return run(bounds_opts, twisteq::cli::cmd_verify_bounds);
    if (dist->parsed()) return run(dist_opts, twisteq::cli::cmd_verify_distributions);
    if (sweep->parsed()) return run(sweep_opts, twisteq::cli::cmd_sweep);
    if (report->parsed()) return twisteq::cli::cmd_report(report_dir, std::cout);
  } catch (const twisteq::FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return twisteq::cli::kInputError;
  } catch (const twisteq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return twisteq::cli::kInputError;
  } catch (const twisteq::ModelError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return twisteq::cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return twisteq::cli::kVerificationFailure;
  }
  return twisteq::cli::kInputError;
}
