#include "twisteq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "twisteq/basic_solutions.hpp"
#include "twisteq/rep_model.hpp"
#include "twisteq/suites.hpp"

namespace twisteq::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

void ensure_out(const fs::path& dir) { fs::create_directories(dir); }

std::vector<int> geometric_grid(int lo, int hi) {
  std::vector<int> out;
  double x = lo;
  while (x <= hi) {
    out.push_back(static_cast<int>(x));
    x = std::max(x + 2.0, x * 1.6);
  }
  return out;
}

}  // namespace

RunConfig resolve_config(const CommonOptions& opts) {
  RunConfig cfg = opts.config ? load_config(*opts.config) : default_config();
  if (opts.out) cfg.out = *opts.out;
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.tol) cfg.tol = *opts.tol;
  if (opts.truncation) cfg.truncation = *opts.truncation;
  if (opts.threads) cfg.threads = *opts.threads;
  cfg.validate();
  return cfg;
}

int cmd_solve(const RunConfig& cfg, const fs::path& g_file,
              std::optional<double> m_flag, std::optional<int> one_sided_mode,
              std::ostream& log) {
  CoeffVector g = [&] {
    const json j = load_json(g_file);
    return coeff_from_json(j);
  }();
  const double m = m_flag.value_or(cfg.m_grid.front());
  ensure_out(cfg.out);

  SolveOptions opts;
  opts.tol = 1e300;  // report the residual; the exit code applies cfg.tol
  opts.t_grid = cfg.sobolev_orders;
  opts.record_mode_pairs = true;

  if (one_sided_mode) {
    const OneSidedResult r = solve_one_sided(g, *one_sided_mode, m, opts);
    save_json(cfg.out / "one_sided.json", one_sided_result_to_json(r, m));
    log << "one-sided split at n = " << *one_sided_mode << ": |support(g~)| = "
        << r.split.g_tilde.support_size()
        << ", off-support residue = " << r.split.off_support_residue << "\n";
    return kOk;
  }

  const SolveResult r = solve_full(g, m, opts);
  save_json(cfg.out / "solve.json", solve_result_to_json(r, m));
  const double rel = r.residual / std::max(r.residual_scale, 1e-300);
  log << "solved: support " << r.f.support_size() << ", relative residual " << rel
      << " (tol " << cfg.tol << ")\n";
  for (const auto& [s, v] : r.obstructions.values) {
    log << "  D_" << s << " = " << v.real() << (v.imag() < 0 ? " - " : " + ")
        << std::abs(v.imag()) << "i\n";
  }
  return rel <= cfg.tol ? kOk : kVerificationFailure;
}

int cmd_verify_bounds(const RunConfig& cfg, std::ostream& log) {
  ensure_out(cfg.out);
  CsvWriter csv(
      "series,nu_re,nu_im,delta,m,n_max,n,index,re_b,im_b,weighted_b,majorant,"
      "valid,holds");
  BoundGridSummary total;
  // one (model, m) at a time so rows stream in grid order
  for (const auto& ms : cfg.models) {
    for (double m : cfg.m_grid) {
      const std::vector<ModelSpec> one_model{ms};
      const std::vector<double> one_m{m};
      const BoundGridSummary s =
          run_bound_grid(one_model, one_m, cfg.n_max, Exec::Parallel, &csv);
      total.entries_checked += s.entries_checked;
      total.entries_in_validity += s.entries_in_validity;
      total.violations += s.violations;
      total.worst_margin = std::max(total.worst_margin, s.worst_margin);
    }
  }
  csv.write(cfg.out / "bounds.csv");
  save_json(cfg.out / "bounds_summary.json",
            json{{"entries_checked", total.entries_checked},
                 {"entries_in_validity", total.entries_in_validity},
                 {"violations", total.violations},
                 {"worst_margin", total.worst_margin}});
  log << "bound certificates: " << total.violations << " violations in "
      << total.entries_in_validity << " validity entries (of "
      << total.entries_checked << " checked), worst margin " << total.worst_margin
      << "\n";
  return total.violations == 0 ? kOk : kVerificationFailure;
}

int cmd_verify_distributions(const RunConfig& cfg, std::ostream& log) {
  ensure_out(cfg.out);
  const ResidualSuite res =
      run_residual_identity(cfg.models, cfg.m_grid, cfg.num_g, cfg.support_radius,
                            cfg.tol, cfg.seed, Exec::Parallel);
  log << "residual identity: worst relative residual " << res.worst << " over "
      << res.cases.size() << " cases, " << res.failures << " failures\n";

  const CoboundarySuite cob =
      run_coboundary_suite(cfg.models, cfg.m_grid, 200, 1e-10, Exec::Parallel);
  log << "coboundary annihilation: worst relative value " << cob.worst << ", "
      << cob.failures << " failures\n";

  std::vector<int> ells;
  for (int ell = cfg.support_radius / 5; ell <= cfg.support_radius + 2 * (cfg.support_radius / 5);
       ell += std::max(2, cfg.support_radius / 5)) {
    ells.push_back(ell);
  }
  const ConvergenceSuite conv = run_convergence_suite(
      cfg.models, cfg.m_grid, cfg.support_radius, ells, cfg.seed, Exec::Parallel);
  log << "truncation convergence: " << conv.failures << " failures over "
      << conv.rows.size() << " functionals\n";

  json cases = json::array();
  for (const auto& c : res.cases) {
    cases.push_back(json{{"model", c.model},
                         {"m", c.m},
                         {"g_index", c.g_index},
                         {"rel_residual", c.rel_residual},
                         {"pass", c.pass}});
  }
  json cob_rows = json::array();
  for (const auto& r : cob.rows) {
    cob_rows.push_back(json{{"model", r.model},
                            {"m", r.m},
                            {"checked", r.checked},
                            {"worst_rel", r.worst_rel},
                            {"pass", r.pass}});
  }
  json conv_rows = json::array();
  for (const auto& r : conv.rows) {
    conv_rows.push_back(json{{"model", r.model},
                             {"m", r.m},
                             {"s", r.s},
                             {"errors", r.errors},
                             {"monotone", r.monotone},
                             {"exact_past_support", r.exact_past_support}});
  }
  const int failures = res.failures + cob.failures + conv.failures;
  save_json(cfg.out / "verify_distributions.json",
            json{{"residual_identity", cases},
                 {"coboundary", cob_rows},
                 {"convergence", conv_rows},
                 {"failures", failures}});
  return failures == 0 ? kOk : kVerificationFailure;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& log) {
  ensure_out(cfg.out);
  CsvWriter csv("series,nu_re,nu_im,delta,m,K,kind,t,idx,x,lhs,rhs");

  auto model_fields = [&](const ModelSpec& ms, double m, int K) {
    csv.field(ms.name);
    csv.field(ms.params.nu().real());
    csv.field(ms.params.nu().imag());
    csv.field(to_string(ms.params.delta()));
    csv.field(m);
    csv.field(K);
  };

  // weighted growth + slope fits + plot data
  const auto growth =
      run_growth_suite(cfg.models, cfg.m_grid, cfg.growth_lo, cfg.growth_hi,
                       Exec::Parallel);
  std::size_t gi = 0;
  for (const auto& ms : cfg.models) {
    for (double m : cfg.m_grid) {
      const GrowthFit& fit = growth[gi++];
      CsvWriter plot("n,growth");
      for (const auto& [x, y] : fit.points) {
        model_fields(ms, m, 0);
        csv.field("growth");
        csv.field(0.0);
        csv.field(0);
        csv.field(x);
        csv.field(y);
        csv.field(0.0);
        csv.end_row();
        plot.field(x);
        plot.field(y);
        plot.end_row();
      }
      plot.write(cfg.out / ("plot_growth_" + sanitize(ms.name) + "_m" +
                            format_double(m) + ".csv"));
      log << "growth " << ms.name << " m=" << m << ": slope " << fit.slope
          << " (limit " << fit.limit << (fit.pass ? ", ok)" : ", EXCEEDED)") << "\n";
    }
  }

  // l2 bound across a doubling window ladder
  const std::vector<int> Ks{cfg.truncation / 4, cfg.truncation / 2, cfg.truncation};
  const L2Suite l2 = run_l2_suite(cfg.models, cfg.m_grid, Ks,
                                  std::min(cfg.num_g, 5), cfg.support_radius, 1.05,
                                  cfg.seed, Exec::Parallel);
  for (const auto& r : l2.rows) {
    const auto ms = std::find_if(cfg.models.begin(), cfg.models.end(),
                                 [&](const ModelSpec& s) { return s.name == r.model; });
    model_fields(*ms, r.m, r.K);
    csv.field("l2");
    csv.field(0.0);
    csv.field(r.g_index);
    csv.field(double(r.K));
    csv.field(r.norm_f);
    csv.field(r.bound);
    csv.end_row();
  }
  log << "l2 bound: worst ratio " << l2.worst_ratio << ", "
      << l2.monotonicity_failures << " monotonicity failures\n";

  // tame ratios over basis data, geometric n grid
  const auto n_grid = geometric_grid(4, 500);
  for (const auto& ms : cfg.models) {
    const bool anti = ms.params.series() == Series::DiscreteAntiholomorphic;
    CsvWriter plot("n,ratio");
    for (double m : cfg.m_grid) {
      for (double t : cfg.sobolev_orders) {
        for (int n0 : n_grid) {
          int n = anti ? -n0 : n0;
          while (!index_in_model(ms.params, n)) n += anti ? -1 : 1;
          if (is_obstruction_index(ms.params, n)) continue;
          const double ratio =
              tame_ratio(CoeffVector::basis(ms.params, n), m, t);
          model_fields(ms, m, 0);
          csv.field("tame");
          csv.field(t);
          csv.field(0);
          csv.field(double(std::abs(n)));
          csv.field(ratio);
          csv.field(0.0);
          csv.end_row();
          if (t == cfg.sobolev_orders.front() && m == cfg.m_grid.front()) {
            plot.field(double(std::abs(n)));
            plot.field(ratio);
            plot.end_row();
          }
        }
      }
    }
    plot.write(cfg.out / ("plot_tame_" + sanitize(ms.name) + ".csv"));
  }

  // functional norm pairs over basis data
  for (const auto& ms : cfg.models) {
    for (double m : cfg.m_grid) {
      for (int j0 : geometric_grid(4, 400)) {
        const bool anti = ms.params.series() == Series::DiscreteAntiholomorphic;
        int j = anti ? -j0 : j0;
        while (!index_in_model(ms.params, j)) j += anti ? -1 : 1;
        if (is_obstruction_index(ms.params, j)) continue;
        const CoeffVector uj = CoeffVector::basis(ms.params, j);
        for (int s : obstruction_indices(ms.params)) {
          const auto [lhs, rhs] = distribution_norm_pair(ms.params, s, uj, m, 0.0);
          model_fields(ms, m, 0);
          csv.field("dnorm");
          csv.field(0.0);
          csv.field(s);
          csv.field(double(std::abs(j)));
          csv.field(lhs);
          csv.field(rhs);
          csv.end_row();
        }
      }
    }
  }

  csv.write(cfg.out / "sweep.csv");
  log << "sweep tables written to " << (cfg.out / "sweep.csv").string() << "\n";
  const int growth_failures =
      static_cast<int>(std::count_if(growth.begin(), growth.end(),
                                     [](const GrowthFit& f) { return !f.pass; }));
  const int failures = growth_failures + l2.monotonicity_failures + l2.bound_failures;
  return failures == 0 ? kOk : kVerificationFailure;
}

int cmd_report(const fs::path& dir, std::ostream& log) {
  if (!fs::exists(dir)) {
    log << "report: no such directory " << dir.string() << "\n";
    return kInputError;
  }
  json report = json::object();
  int failures = 0;
  const auto check = [&](const fs::path& file, const std::string& key,
                         auto&& summarize) {
    if (!fs::exists(file)) return;
    try {
      const json j = load_json(file);
      report[key] = summarize(j);
    } catch (const FormatError& e) {
      report[key] = json{{"error", e.what()}};
      ++failures;
    }
  };
  check(dir / "bounds_summary.json", "bounds", [&](const json& j) {
    const int v = j.value("violations", -1);
    if (v != 0) ++failures;
    log << "bounds: " << v << " violations\n";
    return j;
  });
  check(dir / "verify_distributions.json", "distributions", [&](const json& j) {
    const int f = j.value("failures", -1);
    if (f != 0) ++failures;
    log << "distributions: " << f << " failures\n";
    return json{{"failures", f}};
  });
  check(dir / "solve.json", "solve", [&](const json& j) {
    const double r = j.value("residual", 0.0);
    log << "solve: residual " << r << "\n";
    return json{{"residual", r}};
  });
  if (fs::exists(dir / "sweep.csv")) {
    report["sweep"] = json{{"file", (dir / "sweep.csv").string()}};
    log << "sweep: tables present\n";
  }
  report["failures"] = failures;
  save_json(dir / "report.json", report);
  return failures == 0 ? kOk : kVerificationFailure;
}

}  // namespace twisteq::cli
