#pragma once

#include <utility>
#include <vector>

#include "twisteq/obstructions.hpp"

namespace twisteq {

class UntwistedCaseError : public std::invalid_argument {
 public:
  UntwistedCaseError()
      : std::invalid_argument(
            "m = 0 is the untwisted coboundary problem with its own obstruction "
            "theory; this library handles m != 0") {}
};

class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OracleError : public std::runtime_error {
 public:
  OracleError(const std::string& what, double condition_estimate)
      : std::runtime_error(what), condition_estimate(condition_estimate) {}
  double condition_estimate;
};

struct TamePair {
  double t;
  double lhs;
  double rhs;
};

// Mode-wise estimate data: the single-mode and cumulative-tail norms of the
// solution against Theta-power norms of the one-sided data at both candidate
// exponents (|m|+3)/2 and (|m|+5)/2.
struct ModePair {
  int n;
  double mode_norm;      // ||f_n u_n||_t
  double tail_norm;      // ||f|_n||_t
  double rhs_theta3;     // ||Theta^{(|m|+3)/2}(g|_{n+/-2})||_{t+1/2}
  double rhs_theta5;     // ||Theta^{(|m|+5)/2}(g|_{n+/-2})||_{t+1/2}
};

struct SolveOptions {
  double tol = 1e-9;                       // relative residual bound
  std::vector<double> t_grid = {0.0, 1.0, 2.0};
  bool record_mode_pairs = false;
  double mode_t = 0.0;
};

struct SolveResult {
  CoeffVector f;
  ObstructionReport obstructions;
  double residual = 0.0;       // ||(X+m)f - g - sum D_n(g) u_n||_0
  double residual_scale = 0.0; // ||g||_0
  std::vector<TamePair> tame_pairs;   // (t, ||f||_t, ||g||_{t+|m|/2+3})
  std::vector<ModePair> mode_pairs;
};

// f = sum_{n not in S} g_n f_{n}; obstruction values D_n(g); residual check
// against tol * ||g||_0. Throws UntwistedCaseError for m = 0.
SolveResult solve_full(const CoeffVector& g, double m, const SolveOptions& opts = {});

struct OneSidedResult {
  CoeffVector f_tilde;
  SplitReport split;
  std::vector<TamePair> f_pairs;   // (t, ||f~||_t, ||g|_n||_{t+|m|/2+3})
  std::vector<TamePair> g_pairs;   // (t, ||g~||_t, ||g|_n||_{t+|m|/2+4})
};

OneSidedResult solve_one_sided(const CoeffVector& g, int n, double m,
                               const SolveOptions& opts = {});

// Truncated window oracle for the coefficient equation, independent of the
// basic-solution construction.
//   FreeMinimalNorm: rows only where every referenced unknown lies inside the
//     window; minimum-norm least squares (feasible sets are nested in K, so
//     the solution norm is nondecreasing in K and bounded by the l2 solution).
//   ZeroHalo: one row per window index with out-of-window unknowns dropped;
//     exact for data whose solution is supported inside the window.
enum class OracleBoundary { FreeMinimalNorm, ZeroHalo };

struct OracleConfig {
  int truncation_radius = 0;
  OracleBoundary boundary = OracleBoundary::FreeMinimalNorm;
  double tol = 1e-8;  // relative residual acceptance for the linear solve
};

struct OracleSolution {
  CoeffVector f;               // restricted to |k| <= K - 4
  double condition_estimate = 0.0;
  double residual = 0.0;       // ||A x - b|| / ||b||
};

// Requires K >= 2 * support_radius(rhs) + 4.
OracleSolution oracle_banded_solve(const RepParams& params, const CoeffVector& rhs,
                                   double m, const OracleConfig& cfg);

// (||f||_0, |m|^{-1} ||g||_0) with f the free-boundary truncated solution of
// (X+m)f = g (no obstruction correction).
std::pair<double, double> l2_bound_check(const CoeffVector& g, double m,
                                         const OracleConfig& cfg);

// ||f||_t / ||g + sum D_n(g) u_n||_{t+|m|/2+3}; throws SolveError on a zero
// denominator.
double tame_ratio(const CoeffVector& g, double m, double t);

}  // namespace twisteq
