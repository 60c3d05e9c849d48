#include "twisteq/rep_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace twisteq {

namespace {

// The antiholomorphic model is the mirror (k -> -k) of the holomorphic one
// with parameter -nu; norms and weights reduce through |k| and |Re(nu)|.
double real_param_abs(const RepParams& p) { return std::abs(p.nu().real()); }

}  // namespace

bool index_in_model(const RepParams& params, int k) {
  const int n = static_cast<int>(params.nu().real());
  switch (params.series()) {
    case Series::Principal:
      return params.delta() == Parity::Plus ? (k % 2 == 0) : (std::abs(k % 2) == 1);
    case Series::Complementary:
      return k % 2 == 0;
    case Series::DiscreteHolomorphic:
      return k >= n + 1 && (k - n - 1) % 2 == 0;
    case Series::DiscreteAntiholomorphic:
      return k <= n - 1 && (n - 1 - k) % 2 == 0;
  }
  return false;
}

int base_index(const RepParams& params) {
  const int n = static_cast<int>(params.nu().real());
  switch (params.series()) {
    case Series::Principal:
      return params.delta() == Parity::Plus ? 0 : 1;
    case Series::Complementary:
      return 0;
    case Series::DiscreteHolomorphic:
      return n + 1;
    case Series::DiscreteAntiholomorphic:
      return n - 1;
  }
  return 0;
}

std::vector<int> obstruction_indices(const RepParams& params) {
  const int n = static_cast<int>(params.nu().real());
  switch (params.series()) {
    case Series::Principal:
      return params.delta() == Parity::Plus ? std::vector<int>{0, 2}
                                            : std::vector<int>{-1, 1};
    case Series::Complementary:
      return {0, 2};
    case Series::DiscreteHolomorphic:
      return {n + 1};
    case Series::DiscreteAntiholomorphic:
      return {n - 1};
  }
  return {};
}

bool is_obstruction_index(const RepParams& params, int k) {
  for (int s : obstruction_indices(params)) {
    if (s == k) return true;
  }
  return false;
}

IndexSet::IndexSet(const RepParams& params, int truncation_radius)
    : params_(params), radius_(truncation_radius) {
  if (truncation_radius < 0) throw ModelError("truncation radius must be >= 0");
}

std::vector<int> IndexSet::enumerate() const {
  std::vector<int> out;
  const int b = base_index(params_);
  switch (params_.series()) {
    case Series::Principal:
    case Series::Complementary: {
      int lo = -radius_;
      while ((lo - b) % 2 != 0) ++lo;
      for (int k = lo; k <= radius_; k += 2) out.push_back(k);
      break;
    }
    case Series::DiscreteHolomorphic:
      for (int k = b; k <= radius_; k += 2) out.push_back(k);
      break;
    case Series::DiscreteAntiholomorphic:
      for (int k = b; k >= -radius_; k -= 2) out.push_back(k);
      std::reverse(out.begin(), out.end());
      break;
  }
  return out;
}

double log_basis_norm_sq(const RepParams& params, int k) {
  if (!index_in_model(params, k)) {
    throw ModelError("index " + std::to_string(k) + " outside the model index set");
  }
  if (params.series() == Series::Principal) return 0.0;

  // ||u_k||^2 = prod over j from |base|+2 up to |k| (step 2) of the ratio
  // (j-1-nu)/(j-1+nu), accumulated as logs.
  const double nu = params.series() == Series::Complementary ? params.nu().real()
                                                             : real_param_abs(params);
  const int lo = std::abs(base_index(params));
  const int hi = std::abs(k);
  double acc = 0.0;
  for (int j = lo + 2; j <= hi; j += 2) {
    acc += std::log(std::abs((j - 1 - nu) / (j - 1 + nu)));
  }
  return acc;
}

double basis_norm_sq(const RepParams& params, int k) {
  return std::exp(log_basis_norm_sq(params, k));
}

std::vector<double> log_basis_norm_sq_profile(const RepParams& params, int abs_kmax) {
  std::vector<double> out;
  const int lo = std::abs(base_index(params));
  if (abs_kmax < lo) return out;
  out.reserve(static_cast<std::size_t>((abs_kmax - lo) / 2 + 1));
  if (params.series() == Series::Principal) {
    out.assign(static_cast<std::size_t>((abs_kmax - lo) / 2 + 1), 0.0);
    return out;
  }
  const double nu = params.series() == Series::Complementary ? params.nu().real()
                                                             : real_param_abs(params);
  double acc = 0.0;
  out.push_back(acc);
  for (int j = lo + 2; j <= abs_kmax; j += 2) {
    acc += std::log(std::abs((j - 1 - nu) / (j - 1 + nu)));
    out.push_back(acc);
  }
  return out;
}

namespace {

// sqrt of a sum of strictly positive terms given by their logs.
double sqrt_log_sum_exp(const std::vector<double>& logs) {
  if (logs.empty()) return 0.0;
  const double m = *std::max_element(logs.begin(), logs.end());
  if (m == -std::numeric_limits<double>::infinity()) return 0.0;
  double s = 0.0;
  for (double l : logs) s += std::exp(l - m);
  return std::exp(0.5 * m) * std::sqrt(s);
}

}  // namespace

double sobolev_norm(const CoeffVector& f, double s) {
  if (s < 0.0) throw ModelError("Sobolev order must be >= 0");
  const RepParams& p = f.params();
  std::vector<double> logs;
  logs.reserve(f.support_size());
  for (const auto& [k, v] : f.entries()) {
    const double a = std::abs(v);
    if (a == 0.0) continue;
    const double w = 1.0 + p.mu() + 2.0 * double(k) * double(k);
    logs.push_back(s * std::log(w) + log_basis_norm_sq(p, k) + 2.0 * std::log(a));
  }
  return sqrt_log_sum_exp(logs);
}

double equiv_sobolev_norm(const CoeffVector& f, double s) {
  if (s < 0.0) throw ModelError("Sobolev order must be >= 0");
  const RepParams& p = f.params();
  const double re = p.series() == Series::DiscreteAntiholomorphic
                        ? real_param_abs(p)
                        : p.nu().real();
  std::vector<double> logs;
  logs.reserve(f.support_size());
  for (const auto& [k, v] : f.entries()) {
    const double a = std::abs(v);
    if (a == 0.0) continue;
    logs.push_back((2.0 * s - re) * std::log(1.0 + std::abs(k)) + 2.0 * std::log(a));
  }
  return sqrt_log_sum_exp(logs);
}

CoeffVector theta_power_apply(const CoeffVector& f, double p) {
  if (p < 0.0) throw ModelError("Theta power must be >= 0");
  if (p == 0.0) return f;
  CoeffVector out(f.params());
  const bool integral = p == std::floor(p) && p <= 62.0;
  const long long ip = integral ? static_cast<long long>(p) : 0;
  for (const auto& [k, v] : f.entries()) {
    if (k == 0) continue;  // ik = 0 eigenvalue
    if (integral) {
      // (ik)^p = i^p k^p, kept exact in phase for integer powers
      static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const Complex phase = i_pow[ip % 4];
      out.set(k, v * phase * std::pow(static_cast<double>(k), static_cast<double>(ip)));
    } else {
      out.set(k, v * std::pow(std::abs(static_cast<double>(k)), p));
    }
  }
  return out;
}

CoeffVector restrict(const CoeffVector& f, int n) {
  if (n == 0 || !index_in_model(f.params(), n)) {
    throw ModelError("restriction index must lie in I_nu \\ {0}");
  }
  CoeffVector out(f.params());
  for (const auto& [k, v] : f.entries()) {
    if ((n > 0 && k >= n) || (n < 0 && k <= n)) out.set(k, v);
  }
  return out;
}

RepParams mirror_model(const RepParams& params) {
  switch (params.series()) {
    case Series::Principal:
    case Series::Complementary:
      return params;
    case Series::DiscreteHolomorphic:
      return make_params(Series::DiscreteAntiholomorphic, -params.nu(), Parity::Minus,
                         params.gap());
    case Series::DiscreteAntiholomorphic:
      return make_params(Series::DiscreteHolomorphic, -params.nu(), Parity::Plus,
                         params.gap());
  }
  return params;
}

CoeffVector mirror_vector(const CoeffVector& f) {
  CoeffVector out(mirror_model(f.params()));
  for (const auto& [k, v] : f.entries()) out.set(-k, v);
  return out;
}

}  // namespace twisteq
