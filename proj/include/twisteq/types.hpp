#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace twisteq {

using Complex = std::complex<double>;

// Non-trivial irreducible unitary series of SL(2,R), classified by the
// representation parameter nu with Casimir parameter mu = 1 - nu^2.
enum class Series {
  Principal,              // nu in iR (includes the mock case nu = 0)
  Complementary,          // nu real, 0 < |nu| < 1, spherical model only
  DiscreteHolomorphic,    // nu in Z+, weights nu+1, nu+3, ...
  DiscreteAntiholomorphic // nu in Z-, weights ..., nu-3, nu-1
};

enum class Parity { Plus, Minus };

const char* to_string(Series s);
const char* to_string(Parity p);

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One irreducible model. Construct through make_params, which validates the
// series/nu/delta combination and caches mu.
class RepParams {
 public:
  Series series() const { return series_; }
  Complex nu() const { return nu_; }
  Parity delta() const { return delta_; }
  double gap() const { return gap_; }
  double mu() const { return mu_; }  // 1 - nu^2, real for every valid model

  bool operator==(const RepParams& o) const {
    return series_ == o.series_ && nu_ == o.nu_ && delta_ == o.delta_;
  }
  bool operator!=(const RepParams& o) const { return !(*this == o); }

  std::string label() const;

 private:
  friend RepParams make_params(Series, Complex, Parity, double);
  RepParams(Series s, Complex nu, Parity d, double gap, double mu)
      : series_(s), nu_(nu), delta_(d), gap_(gap), mu_(mu) {}

  Series series_;
  Complex nu_;
  Parity delta_;
  double gap_;
  double mu_;
};

// Validates:
//   Principal: Re(nu) = 0.
//   Complementary: nu real, 0 < |nu| <= gap < 1, delta = Plus.
//   DiscreteHolomorphic: nu a positive integer, delta = Plus.
//   DiscreteAntiholomorphic: nu a negative integer, delta = Minus.
// gap must lie in (0,1); it only constrains the complementary series.
RepParams make_params(Series series, Complex nu, Parity delta, double gap = 0.9);

}  // namespace twisteq
