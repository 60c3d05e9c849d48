#pragma once

#include <map>
#include <utility>
#include <vector>

#include "twisteq/coeff_vector.hpp"
#include "twisteq/rational.hpp"
#include "twisteq/rep_model.hpp"

namespace twisteq {

// The basic solution f_{n}: the finitely supported vector with
// (X+m) f_{n} = u_n + sum_{s in S} d_s u_s. b holds its coefficients, d the
// correction coefficients on the obstruction set.
struct BasicSolution {
  int n = 0;
  double m = 0.0;
  CoeffVector b;
  std::map<int, Complex> d;
};

// Downward two-initial-element recursion from the target mode n; negative n
// goes through the mirror symmetry (with the recursion continued one step
// past the positive-side floor when the obstruction set is asymmetric).
// Throws ModelError for n in S or n outside I_nu.
BasicSolution basic_solution(const RepParams& params, int n, double m);

// One certified coefficient of a basic solution: the basis index n-2k, the
// raw and norm-weighted magnitudes, the series majorant c (NaN where its
// formula degenerates), the lemma validity flag and the comparison outcome.
struct BoundEntry {
  int index;        // n - 2k
  int k;
  Complex b;
  double abs_b;
  double weighted_b;  // |b| * ||u_{n-2k}|| / ||u_n||
  double majorant;
  bool in_validity;
  bool holds;
};

struct BoundCertificate {
  int n = 0;
  double m = 0.0;
  std::vector<BoundEntry> entries;  // ascending k
  int violations_in_validity = 0;
};

// Majorants: principal 2/|n-2k+1+nu| * prod(1+|m|/|n-2l+1+nu|); complementary
// 4/(n-2k+1+nu) * prod(1+(|m|+2-nu)/(n-2l-1+nu)); discrete
// 2/sqrt((n-2k+1)^2-nu^2) * prod(1+|m|/(n-2l-1-nu)) compared against the
// norm-weighted coefficient. n must be positive for two-sided models;
// antiholomorphic models certify the mirrored solution.
BoundCertificate bound_certificate(const RepParams& params, int n, double m);

// max_k |b_{n,n-2k}| ||u_{n-2k}|| / ||u_n||
double weighted_growth(const RepParams& params, int n, double m);

// (||f_{n}||_t, (1+mu+2n^2)^{t/2} |n|^{(|m|+3)/2} ||u_n||) for constant fits.
std::pair<double, double> basic_solution_norm_bound(const RepParams& params, int n,
                                                    double m, double t);

// Exact replay for integer nu and rational m; keys match basic_solution(...).b.
std::map<int, Rational> basic_solution_rational(const RepParams& params, int n,
                                                const Rational& m);
// The correction coefficients d on the obstruction set, exactly.
std::map<int, Rational> corrections_rational(const RepParams& params, int n,
                                             const Rational& m);

}  // namespace twisteq
