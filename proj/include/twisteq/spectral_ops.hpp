#pragma once

#include "twisteq/coeff_vector.hpp"
#include "twisteq/rep_model.hpp"

namespace twisteq {

// (X+m) f through the basis action
//   (X+m)u_k = ((k+1+nu)/2) u_{k+2} + m u_k - ((k-1-nu)/2) u_{k-2},
// with the lowest-weight reading (X+m)u_n = m u_n + n u_{n+2} in the
// holomorphic discrete series; the antiholomorphic series goes through the
// mirror transport.
CoeffVector apply_X_plus_m(const CoeffVector& f, double m);

// Same operator through the coefficient equation
//   g_k = -((k+1-nu)/2) f_{k+2} + m f_k + ((k-1+nu)/2) f_{k-2},
// indices outside I_nu reading as zero. Kept as a second code path; the two
// must agree to machine precision.
CoeffVector apply_X_plus_m_coeffwise(const CoeffVector& f, double m);

// || (X+m)f - g - corrections ||_0
double residual(const CoeffVector& f, const CoeffVector& g, double m,
                const CoeffVector& corrections);

// Trivially true for any CoeffVector; part of the operation contract.
bool is_theta_finite(const CoeffVector& f);

}  // namespace twisteq
