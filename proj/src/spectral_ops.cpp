#include "twisteq/spectral_ops.hpp"

#include <set>

namespace twisteq {

namespace {

bool needs_mirror(const RepParams& p) {
  return p.series() == Series::DiscreteAntiholomorphic;
}

CoeffVector apply_basis_rule(const CoeffVector& f, double m) {
  const RepParams& p = f.params();
  const Complex nu = p.nu();
  const bool holo = p.series() == Series::DiscreteHolomorphic;
  const int lowest = holo ? base_index(p) : 0;
  CoeffVector g(p);
  for (const auto& [k, v] : f.entries()) {
    if (holo && k == lowest) {
      g.add(k, m * v);
      g.add(k + 2, static_cast<double>(k) * v);
      continue;
    }
    g.add(k + 2, (static_cast<double>(k) + 1.0 + nu) / 2.0 * v);
    g.add(k, m * v);
    g.add(k - 2, -(static_cast<double>(k) - 1.0 - nu) / 2.0 * v);
  }
  return g;
}

CoeffVector apply_coeff_rule(const CoeffVector& f, double m) {
  const RepParams& p = f.params();
  const Complex nu = p.nu();
  std::set<int> targets;
  for (const auto& [k, v] : f.entries()) {
    for (int t : {k - 2, k, k + 2}) {
      if (index_in_model(p, t)) targets.insert(t);
    }
  }
  CoeffVector g(p);
  for (int k : targets) {
    Complex val = m * f.at(k);
    val -= (static_cast<double>(k) + 1.0 - nu) / 2.0 * f.at(k + 2);
    if (index_in_model(p, k - 2)) {
      val += (static_cast<double>(k) - 1.0 + nu) / 2.0 * f.at(k - 2);
    }
    g.add(k, val);
  }
  return g;
}

}  // namespace

CoeffVector apply_X_plus_m(const CoeffVector& f, double m) {
  if (needs_mirror(f.params())) {
    return mirror_vector(apply_basis_rule(mirror_vector(f), m));
  }
  return apply_basis_rule(f, m);
}

CoeffVector apply_X_plus_m_coeffwise(const CoeffVector& f, double m) {
  if (needs_mirror(f.params())) {
    return mirror_vector(apply_coeff_rule(mirror_vector(f), m));
  }
  return apply_coeff_rule(f, m);
}

double residual(const CoeffVector& f, const CoeffVector& g, double m,
                const CoeffVector& corrections) {
  require_same_model(f, g);
  require_same_model(f, corrections);
  CoeffVector diff = apply_X_plus_m(f, m);
  diff.add_scaled(g, Complex{-1.0, 0.0});
  diff.add_scaled(corrections, Complex{-1.0, 0.0});
  return sobolev_norm(diff, 0.0);
}

bool is_theta_finite(const CoeffVector&) { return true; }

}  // namespace twisteq
