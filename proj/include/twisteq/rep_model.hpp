#pragma once

#include <cstdlib>
#include <vector>

#include "twisteq/coeff_vector.hpp"
#include "twisteq/types.hpp"

namespace twisteq {

// Membership in I_nu without a truncation radius.
bool index_in_model(const RepParams& params, int k);

// Base index k0 carrying unit norm: 0 (even two-sided), +1 (odd; -1 shares
// the unit norm by symmetry), nu+1 / nu-1 (discrete).
int base_index(const RepParams& params);

// Index set I_nu of a model: an arithmetic progression of step 2, two-sided
// for principal/complementary and one-sided for the discrete series.
// Enumeration is clipped to |k| <= K.
class IndexSet {
 public:
  IndexSet(const RepParams& params, int truncation_radius);

  bool contains(int k) const {
    return index_in_model(params_, k) && std::abs(k) <= radius_;
  }
  int radius() const { return radius_; }
  std::vector<int> enumerate() const;  // ascending

 private:
  RepParams params_;
  int radius_;
};

// The finite obstruction set S^delta_nu, ascending.
std::vector<int> obstruction_indices(const RepParams& params);
bool is_obstruction_index(const RepParams& params, int k);

// log ||u_k||^2 by the step-2 ratio recursion from the base index; the
// principal series is identically 0. Throws ModelError off the index set.
double log_basis_norm_sq(const RepParams& params, int k);
double basis_norm_sq(const RepParams& params, int k);

// Entry i holds log ||u_k||^2 for |k| = |base| + 2i, up to |k| <= abs_kmax.
// One pass of the recursion; use this on O(n) sweeps instead of per-index
// calls.
std::vector<double> log_basis_norm_sq_profile(const RepParams& params, int abs_kmax);

// ||f||_s = (sum_k (1+mu+2k^2)^s ||u_k||^2 |f_k|^2)^{1/2}, accumulated in the
// log domain.
double sobolev_norm(const CoeffVector& f, double s);

// (sum_k (1+|k|)^{2s-Re(nu)} |f_k|^2)^{1/2}; the antiholomorphic series uses
// |Re(nu)| (its norms mirror the holomorphic ones).
double equiv_sobolev_norm(const CoeffVector& f, double s);

// Theta = U - V acts by Theta u_k = ik u_k. Integer p >= 0 multiplies by
// (ik)^p; fractional p acts on magnitudes as |k|^p (phases are irrelevant in
// the norms where fractional powers appear). k = 0 maps to zero for p > 0.
CoeffVector theta_power_apply(const CoeffVector& f, double p);

// f|_n: keeps k >= n for n > 0, k <= n for n < 0. n must be in I_nu \ {0}.
CoeffVector restrict(const CoeffVector& f, int n);

// Mirror transport k -> -k. The two discrete models map onto each other
// (nu -> -nu); the two-sided models map onto themselves. Coefficient values
// are carried unchanged; every antiholomorphic computation reduces through
// this transport.
RepParams mirror_model(const RepParams& params);
CoeffVector mirror_vector(const CoeffVector& f);

}  // namespace twisteq
