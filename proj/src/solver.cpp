#include "twisteq/solver.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "twisteq/parallel.hpp"
#include "twisteq/spectral_ops.hpp"

namespace twisteq {

namespace {

std::vector<double> theta_exponents(double m) {
  return {(std::abs(m) + 3.0) / 2.0, (std::abs(m) + 5.0) / 2.0};
}

}  // namespace

SolveResult solve_full(const CoeffVector& g, double m, const SolveOptions& opts) {
  if (m == 0.0) throw UntwistedCaseError();
  const RepParams& p = g.params();

  std::vector<std::pair<int, Complex>> modes;
  for (const auto& [j, gj] : g.entries()) {
    if (!is_obstruction_index(p, j)) modes.emplace_back(j, gj);
  }

  // Each g_n f_{n} is independent; the merge below runs in mode order so the
  // result does not depend on the thread count.
  std::vector<BasicSolution> sols(modes.size(), BasicSolution{0, m, CoeffVector(p), {}});
  parallel_for(modes.size(), [&](std::size_t i) {
    sols[i] = basic_solution(p, modes[i].first, m);
  });

  SolveResult out{CoeffVector(p), {}, 0.0, 0.0, {}, {}};
  out.obstructions.order = (std::abs(m) + 8.0) / 2.0;
  for (int s : obstruction_indices(p)) out.obstructions.values[s] = -g.at(s);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    out.f.add_scaled(sols[i].b, modes[i].second);
    for (const auto& [s, ds] : sols[i].d) {
      out.obstructions.values[s] += modes[i].second * ds;
    }
  }

  CoeffVector corrections(p);
  for (const auto& [s, v] : out.obstructions.values) corrections.add(s, v);
  out.residual = residual(out.f, g, m, corrections);
  out.residual_scale = sobolev_norm(g, 0.0);
  if (out.residual > opts.tol * std::max(out.residual_scale, 1e-300)) {
    throw SolveError("solution residual " + std::to_string(out.residual) +
                     " exceeds tolerance");
  }

  for (double t : opts.t_grid) {
    out.tame_pairs.push_back(
        {t, sobolev_norm(out.f, t), sobolev_norm(g, t + std::abs(m) / 2.0 + 3.0)});
  }

  if (opts.record_mode_pairs) {
    const double t = opts.mode_t;
    const auto exps = theta_exponents(m);
    for (const auto& [n, fn] : out.f.entries()) {
      if (n == 0) continue;
      const int side = n > 0 ? n + 2 : n - 2;
      if (!index_in_model(p, side)) continue;
      const CoeffVector gn = restrict(g, side);
      ModePair mp{n, 0.0, 0.0, 0.0, 0.0};
      mp.mode_norm = sobolev_norm(CoeffVector::basis(p, n) * fn, t);
      mp.tail_norm = sobolev_norm(restrict(out.f, n), t);
      mp.rhs_theta3 = sobolev_norm(theta_power_apply(gn, exps[0]), t + 0.5);
      mp.rhs_theta5 = sobolev_norm(theta_power_apply(gn, exps[1]), t + 0.5);
      out.mode_pairs.push_back(mp);
    }
  }
  return out;
}

OneSidedResult solve_one_sided(const CoeffVector& g, int n, double m,
                               const SolveOptions& opts) {
  if (m == 0.0) throw UntwistedCaseError();
  SplitReport split = one_sided_split(g, n, m);

  // Recover f~ the same way the split does.
  const RepParams& p = g.params();
  CoeffVector accum(p);
  for (const auto& [l, gl] : g.entries()) {
    if (is_obstruction_index(p, l)) continue;
    accum.add_scaled(basic_solution(p, l, m).b, gl);
  }
  OneSidedResult out{restrict(accum, n), std::move(split), {}, {}};

  for (double t : opts.t_grid) {
    const double base3 = sobolev_norm(g, t + std::abs(m) / 2.0 + 3.0);
    const double base4 = sobolev_norm(g, t + std::abs(m) / 2.0 + 4.0);
    out.f_pairs.push_back({t, sobolev_norm(out.f_tilde, t), base3});
    out.g_pairs.push_back({t, sobolev_norm(out.split.g_tilde, t), base4});
  }
  return out;
}

namespace {

using SpMat = Eigen::SparseMatrix<Complex>;
using Vec = Eigen::VectorXcd;

struct Window {
  std::vector<int> indices;                 // ascending window indices
  std::unordered_map<int, int> col_of;      // index -> column
};

Window make_window(const RepParams& p, int K) {
  Window w;
  w.indices = IndexSet(p, K).enumerate();
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    w.col_of[w.indices[i]] = static_cast<int>(i);
  }
  return w;
}

// Row of the coefficient equation at index k, restricted to window columns.
void emit_row(const RepParams& p, double m, const Window& w, int k, int row,
              std::vector<Eigen::Triplet<Complex>>& trips) {
  const Complex nu = p.nu();
  auto add = [&](int index, Complex c) {
    auto it = w.col_of.find(index);
    if (it != w.col_of.end()) trips.emplace_back(row, it->second, c);
  };
  add(k + 2, -(double(k) + 1.0 - nu) / 2.0);
  add(k, Complex{m, 0.0});
  if (index_in_model(p, k - 2)) add(k - 2, (double(k) - 1.0 + nu) / 2.0);
}

bool row_is_interior(const RepParams& p, int k, int K) {
  // every referenced unknown lies inside the window
  if (index_in_model(p, k + 2) && std::abs(k + 2) > K) return false;
  if (index_in_model(p, k - 2) && std::abs(k - 2) > K) return false;
  return true;
}

double infinity_norm(const SpMat& a) {
  std::vector<double> rowsum(static_cast<std::size_t>(a.rows()), 0.0);
  for (int c = 0; c < a.outerSize(); ++c) {
    for (SpMat::InnerIterator it(a, c); it; ++it) {
      rowsum[static_cast<std::size_t>(it.row())] += std::abs(it.value());
    }
  }
  return rowsum.empty() ? 0.0 : *std::max_element(rowsum.begin(), rowsum.end());
}

// splitmix64, used for the deterministic probe vectors of the condition
// estimate.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

template <typename Solver>
double estimate_condition(const Solver& solver, const SpMat& a) {
  double inv_norm = 0.0;
  for (int probe = 0; probe < 4; ++probe) {
    Vec r(a.rows());
    for (int i = 0; i < r.size(); ++i) {
      const auto h = mix64(static_cast<std::uint64_t>(i) * 7919u + probe);
      r[i] = Complex{(h & 1u) ? 1.0 : -1.0, (h & 2u) ? 1.0 : -1.0};
    }
    Vec x = solver.solve(r);
    if (solver.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
    inv_norm = std::max(inv_norm, x.template lpNorm<Eigen::Infinity>() /
                                      r.template lpNorm<Eigen::Infinity>());
  }
  return inv_norm * infinity_norm(a);
}

}  // namespace

OracleSolution oracle_banded_solve(const RepParams& params, const CoeffVector& rhs,
                                   double m, const OracleConfig& cfg) {
  if (rhs.params() != params) throw ModelError("rhs belongs to a different model");
  if (params.series() == Series::DiscreteAntiholomorphic) {
    OracleSolution sol =
        oracle_banded_solve(mirror_model(params), mirror_vector(rhs), m, cfg);
    sol.f = mirror_vector(sol.f);
    return sol;
  }
  const int K = cfg.truncation_radius;
  if (K < 2 * rhs.support_radius() + 4) {
    throw ModelError("oracle truncation radius must be >= 2 * support radius + 4");
  }

  const Window w = make_window(params, K);
  const int cols = static_cast<int>(w.indices.size());

  std::vector<int> row_indices;
  for (int k : w.indices) {
    if (cfg.boundary == OracleBoundary::ZeroHalo || row_is_interior(params, k, K)) {
      row_indices.push_back(k);
    }
  }
  const int rows = static_cast<int>(row_indices.size());

  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(rows) * 3);
  Vec b = Vec::Zero(rows);
  for (int r = 0; r < rows; ++r) {
    emit_row(params, m, w, row_indices[r], r, trips);
    b[r] = rhs.at(row_indices[r]);
  }
  SpMat a(rows, cols);
  a.setFromTriplets(trips.begin(), trips.end());

  Vec x;
  double cond = 0.0;
  if (cfg.boundary == OracleBoundary::ZeroHalo) {
    Eigen::SparseLU<SpMat> lu;
    lu.analyzePattern(a);
    lu.factorize(a);
    if (lu.info() != Eigen::Success) {
      throw OracleError("zero-halo window system is singular",
                        std::numeric_limits<double>::infinity());
    }
    x = lu.solve(b);
    cond = estimate_condition(lu, a);
  } else {
    // minimum-norm solution through the banded normal equations A A^H y = b
    SpMat aah = (a * a.adjoint()).pruned();
    Eigen::SimplicialLDLT<SpMat, Eigen::Lower> ldlt(aah);
    if (ldlt.info() != Eigen::Success) {
      throw OracleError("window normal equations are not positive definite",
                        std::numeric_limits<double>::infinity());
    }
    Vec y = ldlt.solve(b);
    x = a.adjoint() * y;
    cond = std::sqrt(std::max(estimate_condition(ldlt, aah), 1.0));
  }

  const double bnorm = b.norm();
  const double rel_res = bnorm == 0.0 ? (a * x - b).norm() : (a * x - b).norm() / bnorm;
  if (!(rel_res <= cfg.tol)) {
    throw OracleError("oracle solve residual " + std::to_string(rel_res) +
                          " exceeds tolerance (condition estimate " +
                          std::to_string(cond) + ")",
                      cond);
  }

  OracleSolution sol{CoeffVector(params), cond, rel_res};
  for (int c = 0; c < cols; ++c) {
    const int k = w.indices[static_cast<std::size_t>(c)];
    if (std::abs(k) <= K - 4 && x[c] != Complex{0.0, 0.0}) sol.f.set(k, x[c]);
  }
  return sol;
}

std::pair<double, double> l2_bound_check(const CoeffVector& g, double m,
                                         const OracleConfig& cfg) {
  if (m == 0.0) throw UntwistedCaseError();
  OracleConfig free_cfg = cfg;
  free_cfg.boundary = OracleBoundary::FreeMinimalNorm;
  const OracleSolution sol = oracle_banded_solve(g.params(), g, m, free_cfg);
  return {sobolev_norm(sol.f, 0.0), sobolev_norm(g, 0.0) / std::abs(m)};
}

double tame_ratio(const CoeffVector& g, double m, double t) {
  SolveOptions opts;
  opts.t_grid.clear();
  const SolveResult r = solve_full(g, m, opts);
  CoeffVector corrected = g;
  for (const auto& [s, v] : r.obstructions.values) corrected.add(s, v);
  const double denom = sobolev_norm(corrected, t + std::abs(m) / 2.0 + 3.0);
  if (denom == 0.0) {
    if (sobolev_norm(r.f, t) == 0.0) return 0.0;
    throw SolveError("tame ratio denominator vanished");
  }
  return sobolev_norm(r.f, t) / denom;
}

}  // namespace twisteq
