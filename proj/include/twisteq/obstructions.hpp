#pragma once

#include <map>
#include <utility>

#include "twisteq/basic_solutions.hpp"
#include "twisteq/coeff_vector.hpp"

namespace twisteq {

// Values of the (X-m)-invariant functionals D_n on a finitely supported g,
// for every n in the obstruction set. order records the Sobolev order
// (|m|+8)/2 at which the functionals are defined.
struct ObstructionReport {
  std::map<int, Complex> values;
  double order = 0.0;
};

// D_n(g) = -g_n + sum_{j in I_nu \ S} g_j d_n^{(j)}, where d^{(j)} are the
// correction coefficients of the basic solution f_{j}; the sums are exact
// because g is finitely supported.
ObstructionReport evaluate_obstructions(const CoeffVector& g, double m);
Complex distribution_value(const RepParams& params, int n, const CoeffVector& g,
                           double m);

// (||D_n(g) u_n||_t, ||g||_{(|m|+8)/2 + t}) for constant fits.
std::pair<double, double> distribution_norm_pair(const RepParams& params, int n,
                                                 const CoeffVector& g, double m,
                                                 double t);

// One-sided splitting at mode n: with f~ = restrict(sum_l g_l f_{l}, n),
// g~ = g - (X+m) f~ is supported in {n, n-2} (n > 0) or {n, n+2} (n < 0).
// The closed forms E1, E2 are evaluated as printed and recorded as
// diagnostics only; their signs do not match the operational values in
// general, so the split itself is always the operational one.
struct SplitReport {
  int n = 0;
  CoeffVector g_tilde;
  Complex closed_E1;
  Complex closed_E2;
  bool agree_E1 = false;   // closed E1 vs operational coefficient at n
  bool agree_E2 = false;   // closed E2 vs operational coefficient at n-/+2
  double off_support_residue = 0.0;  // largest dropped coefficient magnitude
};

// Requires g = g|_n, n in I_nu with |n| >= |Re(nu)| + 2.
SplitReport one_sided_split(const CoeffVector& g, int n, double m);

}  // namespace twisteq
