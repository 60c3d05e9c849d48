#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twisteq/config.hpp"
#include "twisteq/io.hpp"
#include "twisteq/parallel.hpp"
#include "twisteq/solver.hpp"

namespace twisteq {

// Seeded data vector on I_nu with |k| <= radius. decay shapes the envelope
// (1+|k|)^{-decay}; 0 gives flat coefficients. Deterministic in (params,
// radius, seed, decay).
CoeffVector random_vector(const RepParams& params, int radius, std::uint64_t seed,
                          double decay = 0.0);

std::uint64_t case_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                        std::uint64_t c);

// -- residual identity ------------------------------------------------------

struct ResidualCase {
  std::string model;
  double m = 0.0;
  int g_index = 0;
  double rel_residual = 0.0;
  bool pass = false;
};

struct ResidualSuite {
  std::vector<ResidualCase> cases;
  double worst = 0.0;
  int failures = 0;
};

ResidualSuite run_residual_identity(const std::vector<ModelSpec>& models,
                                    const std::vector<double>& m_grid, int num_g,
                                    int radius, double tol, std::uint64_t seed,
                                    Exec exec);

// -- coboundary annihilation ------------------------------------------------

struct CoboundaryRow {
  std::string model;
  double m = 0.0;
  int checked = 0;
  double worst_rel = 0.0;
  bool pass = false;
};

struct CoboundarySuite {
  std::vector<CoboundaryRow> rows;
  double worst = 0.0;
  int failures = 0;
};

CoboundarySuite run_coboundary_suite(const std::vector<ModelSpec>& models,
                                     const std::vector<double>& m_grid, int k_max,
                                     double tol, Exec exec);

// -- coefficient bound certificates ------------------------------------------

struct BoundGridSummary {
  long long entries_checked = 0;
  long long entries_in_validity = 0;
  int violations = 0;
  double worst_margin = 0.0;  // max lhs/c inside validity regions
};

// One CSV row per (n, k) when sink is given; aggregate always returned.
BoundGridSummary run_bound_grid(const std::vector<ModelSpec>& models,
                                const std::vector<double>& m_grid, int n_max,
                                Exec exec, CsvWriter* sink = nullptr);

// -- weighted growth ----------------------------------------------------------

struct GrowthFit {
  std::string model;
  double m = 0.0;
  double slope = 0.0;
  double limit = 0.0;  // (|m|+2)/2 + 0.1
  bool pass = false;
  std::vector<std::pair<double, double>> points;  // (n, growth)
};

std::vector<GrowthFit> run_growth_suite(const std::vector<ModelSpec>& models,
                                        const std::vector<double>& m_grid, int n_lo,
                                        int n_hi, Exec exec);

// -- oracle equivalence -------------------------------------------------------

struct OracleEqRow {
  std::string model;
  double m = 0.0;
  int g_index = 0;
  double rel_err = 0.0;  // interior l2 error vs the constructed solution
  bool pass = false;
};

struct OracleEqSuite {
  std::vector<OracleEqRow> rows;
  double worst = 0.0;
  int failures = 0;
};

OracleEqSuite run_oracle_equivalence(const std::vector<ModelSpec>& models,
                                     const std::vector<double>& m_grid, int num_g,
                                     int radius, double tol, std::uint64_t seed,
                                     Exec exec);

// -- l2 bound -----------------------------------------------------------------

struct L2Row {
  std::string model;
  double m = 0.0;
  int g_index = 0;
  int K = 0;
  double norm_f = 0.0;
  double bound = 0.0;   // |m|^{-1} ||g||_0
};

struct L2Suite {
  std::vector<L2Row> rows;
  double worst_ratio = 0.0;
  int bound_failures = 0;      // ratio > ratio_limit at the largest K
  int monotonicity_failures = 0;
};

// Ks must be increasing; the bound is checked at Ks.back(), monotonicity of
// ||f_K|| across Ks (nested windows).
L2Suite run_l2_suite(const std::vector<ModelSpec>& models,
                     const std::vector<double>& m_grid, const std::vector<int>& Ks,
                     int num_g, int radius, double ratio_limit, std::uint64_t seed,
                     Exec exec);

// -- tame constants over the principal mu-grid --------------------------------

struct TameRow {
  double im_nu = 0.0;
  double m = 0.0;
  double t = 0.0;
  double fitted_C = 0.0;   // geometric mean of ratios over the fit window
  double max_ratio = 0.0;
  double ratio_slope = 0.0;  // slope of log ratio vs log n over the full sweep
};

struct TameSuite {
  std::vector<TameRow> rows;
  // per (m, t): fitted C relative to the first nu on the grid
  struct Spread {
    double m = 0.0;
    double t = 0.0;
    double growth = 0.0;        // max over nu of C/C(first) - 1
    double two_sided = 0.0;     // (max C - min C) / min C
    double worst_slope = 0.0;
  };
  std::vector<Spread> spreads;
};

TameSuite run_tame_suite(const std::vector<double>& principal_im_nus,
                         const std::vector<double>& m_grid,
                         const std::vector<double>& t_grid, int n_hi, int fit_lo,
                         Exec exec);

// -- one-sided splitting ------------------------------------------------------

struct SplitRow {
  std::string model;
  double m = 0.0;
  int n = 0;
  double fitted_C0 = 0.0;  // ||g~||_0 / ||g|_n||_{|m|/2+4}
  double fitted_C1 = 0.0;  // same at t = 1
  double f_ratio0 = 0.0;   // ||f~||_0 / ||g|_n||_{|m|/2+3}
  bool support_ok = false;
};

struct SplitSuite {
  std::vector<SplitRow> rows;
  int support_failures = 0;
  double worst_slope = 0.0;  // slope of log fitted_C0 vs log n per (model, m)
  int slope_failures = 0;
};

SplitSuite run_split_suite(const std::vector<ModelSpec>& models,
                           const std::vector<double>& m_grid,
                           const std::vector<int>& n_grid, int width,
                           double slope_limit, std::uint64_t seed, Exec exec);

// -- truncation convergence of the functionals --------------------------------

struct ConvergenceRow {
  std::string model;
  double m = 0.0;
  int s = 0;  // obstruction index
  std::vector<double> errors;  // |D(g|ell) - D(g)| along the ell grid
  bool monotone = false;
  bool exact_past_support = false;
};

struct ConvergenceSuite {
  std::vector<ConvergenceRow> rows;
  int failures = 0;
};

ConvergenceSuite run_convergence_suite(const std::vector<ModelSpec>& models,
                                       const std::vector<double>& m_grid, int radius,
                                       const std::vector<int>& ell_grid,
                                       std::uint64_t seed, Exec exec);

}  // namespace twisteq
