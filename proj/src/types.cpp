#include "twisteq/types.hpp"

#include <cmath>
#include <sstream>

namespace twisteq {

const char* to_string(Series s) {
  switch (s) {
    case Series::Principal: return "principal";
    case Series::Complementary: return "complementary";
    case Series::DiscreteHolomorphic: return "discrete_holomorphic";
    case Series::DiscreteAntiholomorphic: return "discrete_antiholomorphic";
  }
  return "?";
}

const char* to_string(Parity p) { return p == Parity::Plus ? "+" : "-"; }

namespace {

bool is_integer(double x) { return x == std::floor(x); }

}  // namespace

RepParams make_params(Series series, Complex nu, Parity delta, double gap) {
  if (!(gap > 0.0 && gap < 1.0)) {
    throw ModelError("spectral gap must lie in (0,1)");
  }
  switch (series) {
    case Series::Principal:
      if (nu.real() != 0.0) {
        throw ModelError("principal series requires Re(nu) = 0");
      }
      break;
    case Series::Complementary:
      if (nu.imag() != 0.0 || nu.real() == 0.0 || std::abs(nu.real()) > gap) {
        throw ModelError("complementary series requires nu real with 0 < |nu| <= gap < 1");
      }
      if (delta != Parity::Plus) {
        throw ModelError("complementary series has no non-spherical model");
      }
      break;
    case Series::DiscreteHolomorphic:
      if (nu.imag() != 0.0 || !is_integer(nu.real()) || nu.real() < 1.0) {
        throw ModelError("holomorphic discrete series requires nu a positive integer");
      }
      if (delta != Parity::Plus) {
        throw ModelError("holomorphic discrete series is the delta=+ model");
      }
      break;
    case Series::DiscreteAntiholomorphic:
      if (nu.imag() != 0.0 || !is_integer(nu.real()) || nu.real() > -1.0) {
        throw ModelError("antiholomorphic discrete series requires nu a negative integer");
      }
      if (delta != Parity::Minus) {
        throw ModelError("antiholomorphic discrete series is the delta=- model");
      }
      break;
  }
  const Complex mu_c = 1.0 - nu * nu;
  return RepParams(series, nu, delta, gap, mu_c.real());
}

std::string RepParams::label() const {
  std::ostringstream os;
  os << to_string(series_) << ":" << to_string(delta_) << ":nu=" << nu_.real();
  if (nu_.imag() != 0.0) os << (nu_.imag() > 0 ? "+" : "") << nu_.imag() << "i";
  return os.str();
}

}  // namespace twisteq
