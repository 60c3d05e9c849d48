#include "twisteq/obstructions.hpp"

#include <cmath>

#include "twisteq/rep_model.hpp"
#include "twisteq/spectral_ops.hpp"

namespace twisteq {

ObstructionReport evaluate_obstructions(const CoeffVector& g, double m) {
  const RepParams& p = g.params();
  ObstructionReport report;
  report.order = (std::abs(m) + 8.0) / 2.0;
  for (int s : obstruction_indices(p)) report.values[s] = -g.at(s);
  for (const auto& [j, gj] : g.entries()) {
    if (is_obstruction_index(p, j)) continue;
    const BasicSolution sol = basic_solution(p, j, m);
    for (const auto& [s, ds] : sol.d) report.values[s] += gj * ds;
  }
  return report;
}

Complex distribution_value(const RepParams& params, int n, const CoeffVector& g,
                           double m) {
  if (!is_obstruction_index(params, n)) {
    throw ModelError("distribution index must lie in S^delta_nu");
  }
  if (g.params() != params) throw ModelError("vector belongs to a different model");
  return evaluate_obstructions(g, m).values.at(n);
}

std::pair<double, double> distribution_norm_pair(const RepParams& params, int n,
                                                 const CoeffVector& g, double m,
                                                 double t) {
  if (t < 0.0) throw ModelError("Sobolev order must be >= 0");
  const Complex d = distribution_value(params, n, g, m);
  const double lhs = sobolev_norm(CoeffVector::basis(params, n) * d, t);
  const double rhs = sobolev_norm(g, (std::abs(m) + 8.0) / 2.0 + t);
  return {lhs, rhs};
}

SplitReport one_sided_split(const CoeffVector& g, int n, double m) {
  const RepParams& p = g.params();
  if (n == 0 || !index_in_model(p, n)) {
    throw ModelError("splitting mode must lie in I_nu \\ {0}");
  }
  if (std::abs(n) < std::abs(p.nu().real()) + 2.0) {
    throw ModelError("splitting mode must satisfy |n| >= |Re(nu)| + 2");
  }
  for (const auto& [k, v] : g.entries()) {
    if ((n > 0 && k < n) || (n < 0 && k > n)) {
      throw ModelError("one-sided data must satisfy g = g|_n");
    }
  }

  // Operational split. Basic solutions exist for every support index except a
  // possible g_n term with n in S (principal even, n = 2); that term
  // contributes nothing to the restriction anyway since f_{l} lives below l.
  std::map<int, BasicSolution> sols;
  CoeffVector accum(p);
  for (const auto& [l, gl] : g.entries()) {
    if (is_obstruction_index(p, l)) continue;
    auto [it, unused] = sols.emplace(l, basic_solution(p, l, m));
    accum.add_scaled(it->second.b, gl);
  }
  const CoeffVector f_tilde = restrict(accum, n);

  CoeffVector diff = g;
  diff.add_scaled(apply_X_plus_m(f_tilde, m), Complex{-1.0, 0.0});

  const int other = n > 0 ? n - 2 : n + 2;
  SplitReport report{n, CoeffVector(p), {}, {}, false, false, 0.0};
  const double scale = sobolev_norm(g, 0.0) + sobolev_norm(diff, 0.0);
  for (const auto& [k, v] : diff.entries()) {
    if (k == n || k == other) {
      report.g_tilde.set(k, v);
    } else {
      report.off_support_residue = std::max(report.off_support_residue, std::abs(v));
    }
  }
  if (report.off_support_residue > 1e-9 * (1.0 + scale)) {
    throw ModelError("one-sided splitting escaped {n, n-/+2}");
  }

  // Closed forms as printed, from the stored chain coefficients.
  auto b_of = [&sols](int j, int k) {
    auto it = sols.find(j);
    return it == sols.end() ? Complex{0.0, 0.0} : it->second.b.at(k);
  };
  const Complex nu = p.nu();
  Complex e1{0.0, 0.0};
  Complex e2{0.0, 0.0};
  if (n > 0) {
    e1 = -g.at(n);
    for (const auto& [j, gj] : g.entries()) {
      if (j >= n + 4) e1 += (nu - double(n) - 1.0) / 2.0 * b_of(j, n + 2) * gj;
      if (j >= n + 2) e1 += m * b_of(j, n) * gj;
      if (j >= n + 2) e2 += (nu + double(n) - 1.0) / 2.0 * b_of(j, n) * gj;
    }
  } else {
    e1 = -g.at(n);
    for (const auto& [j, gj] : g.entries()) {
      if (j <= n - 4) e1 += (nu + double(n) - 1.0) / 2.0 * b_of(j, n - 2) * gj;
      if (j <= n - 2) e1 += m * b_of(j, n) * gj;
      if (j <= n - 2) e2 += (nu - double(n) - 1.0) / 2.0 * b_of(j, n) * gj;
    }
  }
  report.closed_E1 = e1;
  report.closed_E2 = e2;
  const double tol = 1e-9 * (1.0 + scale);
  report.agree_E1 = std::abs(e1 - report.g_tilde.at(n)) <= tol;
  report.agree_E2 = std::abs(e2 - report.g_tilde.at(other)) <= tol;
  return report;
}

}  // namespace twisteq
