#include "twisteq/basic_solutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "twisteq/spectral_ops.hpp"

namespace twisteq {

namespace {

template <typename S>
bool scalar_is_zero(const S& v);
template <>
bool scalar_is_zero(const Complex& v) { return v == Complex{0.0, 0.0}; }
template <>
bool scalar_is_zero(const Rational& v) { return v.is_zero(); }

// b_{n,n-2} = 2/(n-1+nu), b_{n,n} = 0, then
// b_{n,j-2} = ((j+1-nu) b_{n,j+2} - 2m b_{n,j}) / (j-1+nu) downward to floor.
template <typename S>
std::map<int, S> positive_chain(const S& nu, const S& m, int n, int floor) {
  std::map<int, S> b;
  S den = S(n - 1) + nu;
  if (scalar_is_zero(den)) throw ModelError("degenerate recursion denominator");
  S prev2 = S(0);
  S prev = S(2) / den;
  b[n - 2] = prev;
  for (int j = n - 2; j - 2 >= floor; j -= 2) {
    den = S(j - 1) + nu;
    if (scalar_is_zero(den)) throw ModelError("degenerate recursion denominator");
    S cur = ((S(j + 1) - nu) * prev2 - S(2) * m * prev) / den;
    b[j - 2] = cur;
    prev2 = prev;
    prev = cur;
  }
  return b;
}

// Support floor of the positive-side chain: max S for a positive target,
// -min S for the mirror of a negative one (this continues the recursion one
// extra step down to 0 in the even models, where S = {0,2} is asymmetric).
int chain_floor(const RepParams& params, bool negative_target) {
  const auto s = obstruction_indices(params);
  return negative_target ? -s.front() : s.back();
}

struct ChainPlan {
  RepParams params;   // model the chain runs in (holomorphic for mirrors)
  int n;              // positive target mode of the chain
  int floor;
  bool mirrored;      // negate indices afterwards
};

ChainPlan plan_chain(const RepParams& params, int n) {
  if (!index_in_model(params, n) || is_obstruction_index(params, n)) {
    throw ModelError("basic solution target must lie in I_nu \\ S");
  }
  if (params.series() == Series::DiscreteAntiholomorphic) {
    RepParams holo = mirror_model(params);
    return {holo, -n, chain_floor(holo, false), true};
  }
  if (n < 0) return {params, -n, chain_floor(params, true), true};
  return {params, n, chain_floor(params, false), false};
}

template <typename S>
std::map<int, S> chain_coefficients(const RepParams& params, int n, const S& nu,
                                    const S& m) {
  const ChainPlan plan = plan_chain(params, n);
  std::map<int, S> chain = positive_chain(nu, m, plan.n, plan.floor);
  if (!plan.mirrored) return chain;
  std::map<int, S> out;
  for (const auto& [k, v] : chain) out.emplace(-k, v);
  return out;
}

Complex nu_of_chain(const RepParams& params) {
  // The mirror transport runs the chain with |nu| for discrete models.
  if (params.series() == Series::DiscreteAntiholomorphic) return -params.nu();
  return params.nu();
}

double off_support_tolerance(int n, double scale) {
  return 1e-9 * (1.0 + std::abs(n)) * (1.0 + scale);
}

}  // namespace

BasicSolution basic_solution(const RepParams& params, int n, double m) {
  const Complex nu = nu_of_chain(params);
  std::map<int, Complex> coeffs =
      chain_coefficients<Complex>(params, n, nu, Complex{m, 0.0});

  BasicSolution sol{n, m, CoeffVector(params), {}};
  for (const auto& [k, v] : coeffs) sol.b.set(k, v);

  // (X+m) f_{n} - u_n must land exactly on the obstruction set.
  CoeffVector u = apply_X_plus_m(sol.b, m);
  u.add(n, Complex{-1.0, 0.0});
  const double tol = off_support_tolerance(n, sol.b.max_abs());
  for (int s : obstruction_indices(params)) sol.d[s] = Complex{0.0, 0.0};
  for (const auto& [k, v] : u.entries()) {
    if (is_obstruction_index(params, k)) {
      sol.d[k] = v;
    } else if (std::abs(v) > tol) {
      throw ModelError("basic solution correction escaped the obstruction set");
    }
  }
  return sol;
}

std::map<int, Rational> basic_solution_rational(const RepParams& params, int n,
                                                const Rational& m) {
  const Complex nu_c = nu_of_chain(params);
  if (nu_c.imag() != 0.0 || nu_c.real() != std::floor(nu_c.real())) {
    throw ModelError("rational replay requires an integer representation parameter");
  }
  const Rational nu(static_cast<long long>(nu_c.real()));
  return chain_coefficients<Rational>(params, n, nu, m);
}

std::map<int, Rational> corrections_rational(const RepParams& params, int n,
                                             const Rational& m) {
  const bool anti = params.series() == Series::DiscreteAntiholomorphic;
  const RepParams model = anti ? mirror_model(params) : params;
  const Rational nu(static_cast<long long>(model.nu().real()));
  // Coefficients in the chain model's orientation.
  std::map<int, Rational> chain;
  {
    std::map<int, Rational> b = basic_solution_rational(params, n, m);
    if (anti) {
      for (const auto& [k, v] : b) chain.emplace(-k, v);
    } else {
      chain = std::move(b);
    }
  }
  auto at = [&chain](int k) {
    auto it = chain.find(k);
    return it == chain.end() ? Rational(0) : it->second;
  };
  // Coefficient rule at the obstruction indices; out-of-I_nu indices read as
  // zero, which also covers the lowest-weight boundary reading.
  std::map<int, Rational> d;
  for (int s : obstruction_indices(model)) {
    Rational val = m * at(s) - (Rational(s + 1) - nu) / Rational(2) * at(s + 2);
    if (index_in_model(model, s - 2)) {
      val = val + (Rational(s - 1) + nu) / Rational(2) * at(s - 2);
    }
    d[anti ? -s : s] = val;
  }
  return d;
}

namespace {

struct MajorantSeries {
  // Per-k majorant with a running product; NaN when the printed formula
  // degenerates outside its validity region.
  const RepParams& params;
  int n;
  double m;
  double running = 1.0;
  bool poisoned = false;

  double next(int k) {
    const double am = std::abs(m);
    const double nu_re = params.nu().real();
    switch (params.series()) {
      case Series::Principal: {
        const Complex nu = params.nu();
        running *= 1.0 + am / std::abs(double(n - 2 * k + 1) + nu);
        return 2.0 / std::abs(double(n - 2 * k + 1) + nu) * running;
      }
      case Series::Complementary: {
        const double den = double(n - 2 * k - 1) + nu_re;
        if (den <= 0.0) poisoned = true;
        if (!poisoned) running *= 1.0 + (am + 2.0 - nu_re) / den;
        const double pre = double(n - 2 * k + 1) + nu_re;
        if (poisoned || pre <= 0.0) return std::numeric_limits<double>::quiet_NaN();
        return 4.0 / pre * running;
      }
      default: {
        const double den = double(n - 2 * k - 1) - nu_re;
        if (den <= 0.0) poisoned = true;
        if (!poisoned) running *= 1.0 + am / den;
        const double disc = double(n - 2 * k + 1) * double(n - 2 * k + 1) - nu_re * nu_re;
        if (poisoned || disc <= 0.0) return std::numeric_limits<double>::quiet_NaN();
        return 2.0 / std::sqrt(disc) * running;
      }
    }
  }

  bool in_validity(int k) const {
    const double am = std::abs(m);
    const double nu_re = params.nu().real();
    switch (params.series()) {
      case Series::Principal:
        return double(n - 2 * k) >= std::max(6.0, m * m);
      case Series::Complementary:
        return double(n - 2 * k) - nu_re > std::max(7.0, 2.0 * am * (am + 2.0));
      default:
        return double(n - 2 * k) - nu_re > std::max(6.0, 2.0 * am * am + 2.0);
    }
  }
};

}  // namespace

BoundCertificate bound_certificate(const RepParams& params, int n, double m) {
  if (params.series() == Series::DiscreteAntiholomorphic) {
    BoundCertificate cert = bound_certificate(mirror_model(params), -n, m);
    cert.n = n;
    for (auto& e : cert.entries) e.index = -e.index;
    return cert;
  }
  if (n <= 0) throw ModelError("bound certificates take n > 0 (negative n mirrors)");

  const BasicSolution sol = basic_solution(params, n, m);
  const auto lognorm = log_basis_norm_sq_profile(params, n);
  const int lo = std::abs(base_index(params));
  auto ln_of = [&](int index) { return lognorm[static_cast<std::size_t>((index - lo) / 2)]; };

  BoundCertificate cert{n, m, {}, 0};
  MajorantSeries maj{params, n, m};
  const bool weighted_compare = params.series() == Series::DiscreteHolomorphic;
  for (int k = 1; 2 * k <= n - chain_floor(params, false); ++k) {
    const int index = n - 2 * k;
    // exact zeros (every other coefficient at m = 0) are absent from the map
    const Complex b = sol.b.at(index);
    const double abs_b = std::abs(b);
    const double weighted = abs_b * std::exp(0.5 * (ln_of(index) - ln_of(n)));
    const double c = maj.next(k);
    const bool valid = maj.in_validity(k);
    const double lhs = weighted_compare ? weighted : abs_b;
    const bool holds = !std::isnan(c) && lhs <= c * (1.0 + 1e-12);
    if (valid && !holds) ++cert.violations_in_validity;
    cert.entries.push_back({index, k, b, abs_b, weighted, c, valid, holds});
  }
  return cert;
}

double weighted_growth(const RepParams& params, int n, double m) {
  const BasicSolution sol = basic_solution(params, n, m);
  const auto lognorm = log_basis_norm_sq_profile(params, std::abs(n));
  const int lo = std::abs(base_index(params));
  auto ln_of = [&](int index) {
    return lognorm[static_cast<std::size_t>((std::abs(index) - lo) / 2)];
  };
  const double ln_n = ln_of(n);
  double best = 0.0;
  for (const auto& [k, v] : sol.b.entries()) {
    best = std::max(best, std::abs(v) * std::exp(0.5 * (ln_of(k) - ln_n)));
  }
  return best;
}

std::pair<double, double> basic_solution_norm_bound(const RepParams& params, int n,
                                                    double m, double t) {
  if (t < 0.0) throw ModelError("Sobolev order must be >= 0");
  const BasicSolution sol = basic_solution(params, n, m);
  const double lhs = sobolev_norm(sol.b, t);
  const double w = 1.0 + params.mu() + 2.0 * double(n) * double(n);
  const double rhs = std::exp(0.5 * (t * std::log(w) + log_basis_norm_sq(params, n))) *
                     std::pow(std::abs(double(n)), (std::abs(m) + 3.0) / 2.0);
  return {lhs, rhs};
}

}  // namespace twisteq
