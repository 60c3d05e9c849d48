// Compares the serial reference path of each sweep kernel against the OpenMP
// path on identical grids, and checks that both produce the same results.

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>

#include "twisteq/suites.hpp"

namespace {

using twisteq::Exec;

double seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count();
}

void row(const std::string& name, double serial, double parallel, bool identical) {
  std::cout << std::left << std::setw(22) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(9) << serial << " s" << std::setw(9)
            << parallel << " s   x" << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0)
            << (identical ? "" : "   RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const twisteq::RunConfig cfg = twisteq::default_config();
  const int num_g = quick ? 2 : 20;
  const int radius = quick ? 24 : 60;
  const int n_max = quick ? 200 : 1500;
  const int growth_hi = quick ? 400 : 2000;

  std::cout << "threads available: " << twisteq::max_threads() << "\n";
  std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(11)
            << "serial" << std::setw(11) << "parallel\n";

  {
    twisteq::ResidualSuite a, b;
    const double ts = seconds([&] {
      a = run_residual_identity(cfg.models, cfg.m_grid, num_g, radius, 1e-9,
                                cfg.seed, Exec::Serial);
    });
    const double tp = seconds([&] {
      b = run_residual_identity(cfg.models, cfg.m_grid, num_g, radius, 1e-9,
                                cfg.seed, Exec::Parallel);
    });
    bool same = a.worst == b.worst && a.failures == b.failures;
    row("residual-identity", ts, tp, same);
  }
  {
    twisteq::BoundGridSummary a, b;
    const double ts = seconds(
        [&] { a = run_bound_grid(cfg.models, cfg.m_grid, n_max, Exec::Serial); });
    const double tp = seconds(
        [&] { b = run_bound_grid(cfg.models, cfg.m_grid, n_max, Exec::Parallel); });
    bool same = a.entries_checked == b.entries_checked &&
                a.violations == b.violations && a.worst_margin == b.worst_margin;
    row("bound-certificates", ts, tp, same);
  }
  {
    std::vector<twisteq::GrowthFit> a, b;
    const double ts = seconds([&] {
      a = run_growth_suite(cfg.models, cfg.m_grid, 100, growth_hi, Exec::Serial);
    });
    const double tp = seconds([&] {
      b = run_growth_suite(cfg.models, cfg.m_grid, 100, growth_hi, Exec::Parallel);
    });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].slope == b[i].slope && a[i].points == b[i].points;
    }
    row("weighted-growth", ts, tp, same);
  }
  {
    const std::vector<int> Ks{125, 250, quick ? 300 : 500};
    twisteq::L2Suite a, b;
    const double ts = seconds([&] {
      a = run_l2_suite(cfg.models, cfg.m_grid, Ks, quick ? 1 : 3, radius, 1.05,
                       cfg.seed, Exec::Serial);
    });
    const double tp = seconds([&] {
      b = run_l2_suite(cfg.models, cfg.m_grid, Ks, quick ? 1 : 3, radius, 1.05,
                       cfg.seed, Exec::Parallel);
    });
    bool same = a.worst_ratio == b.worst_ratio && a.rows.size() == b.rows.size();
    row("l2-window-ladder", ts, tp, same);
  }
  return 0;
}
