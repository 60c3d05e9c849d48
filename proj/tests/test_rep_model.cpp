#include <doctest.h>

#include <cmath>
#include <random>

#include "twisteq/rep_model.hpp"

using namespace twisteq;

namespace {

RepParams principal(double im, Parity d = Parity::Plus) {
  return make_params(Series::Principal, Complex{0.0, im}, d);
}

RepParams complementary(double nu, double gap = 0.9) {
  return make_params(Series::Complementary, Complex{nu, 0.0}, Parity::Plus, gap);
}

RepParams discrete(int nu) {
  return nu > 0 ? make_params(Series::DiscreteHolomorphic, Complex{double(nu), 0.0},
                              Parity::Plus)
                : make_params(Series::DiscreteAntiholomorphic,
                              Complex{double(nu), 0.0}, Parity::Minus);
}

}  // namespace

TEST_CASE("make_params validates the series constraints") {
  CHECK(principal(2.0).mu() == doctest::Approx(5.0));  // 1 - (2i)^2
  CHECK(complementary(0.4).mu() == doctest::Approx(0.84));
  CHECK(discrete(3).mu() == doctest::Approx(-8.0));

  CHECK_THROWS_AS(make_params(Series::Principal, Complex{0.1, 1.0}, Parity::Plus),
                  ModelError);
  CHECK_THROWS_AS(make_params(Series::Complementary, Complex{0.4, 0.0}, Parity::Minus, 0.9),
                  ModelError);
  CHECK_THROWS_AS(make_params(Series::Complementary, Complex{0.95, 0.0}, Parity::Plus, 0.9),
                  ModelError);
  CHECK_THROWS_AS(make_params(Series::Complementary, Complex{0.0, 0.0}, Parity::Plus, 0.9),
                  ModelError);
  CHECK_THROWS_AS(make_params(Series::DiscreteHolomorphic, Complex{2.5, 0.0}, Parity::Plus),
                  ModelError);
  CHECK_THROWS_AS(make_params(Series::DiscreteHolomorphic, Complex{-2.0, 0.0}, Parity::Plus),
                  ModelError);
  CHECK_THROWS_AS(make_params(Series::DiscreteAntiholomorphic, Complex{-2.0, 0.0}, Parity::Plus),
                  ModelError);

  // mu sign per series
  CHECK(principal(1.0).mu() >= 1.0);
  CHECK(complementary(-0.6).mu() > 0.0);
  CHECK(complementary(-0.6).mu() < 1.0);
  CHECK(discrete(-2).mu() <= 0.0);
}

TEST_CASE("index sets and obstruction sets") {
  const RepParams even = principal(2.0);
  const RepParams odd = principal(2.0, Parity::Minus);
  const RepParams dh = discrete(2);
  const RepParams da = discrete(-2);

  CHECK(index_in_model(even, -4));
  CHECK_FALSE(index_in_model(even, 3));
  CHECK(index_in_model(odd, -3));
  CHECK_FALSE(index_in_model(odd, 0));
  CHECK(index_in_model(dh, 3));
  CHECK(index_in_model(dh, 7));
  CHECK_FALSE(index_in_model(dh, 1));
  CHECK_FALSE(index_in_model(dh, 4));
  CHECK(index_in_model(da, -3));
  CHECK_FALSE(index_in_model(da, -1));

  CHECK(IndexSet(even, 6).enumerate() == std::vector<int>{-6, -4, -2, 0, 2, 4, 6});
  CHECK(IndexSet(odd, 4).enumerate() == std::vector<int>{-3, -1, 1, 3});
  CHECK(IndexSet(dh, 9).enumerate() == std::vector<int>{3, 5, 7, 9});
  CHECK(IndexSet(da, 9).enumerate() == std::vector<int>{-9, -7, -5, -3});
  for (int k : IndexSet(dh, 30).enumerate()) {
    CHECK(index_in_model(dh, k));
    CHECK(std::abs(k) <= 30);
  }

  CHECK(obstruction_indices(even) == std::vector<int>{0, 2});
  CHECK(obstruction_indices(odd) == std::vector<int>{-1, 1});
  CHECK(obstruction_indices(complementary(0.3)) == std::vector<int>{0, 2});
  CHECK(obstruction_indices(dh) == std::vector<int>{3});
  CHECK(obstruction_indices(da) == std::vector<int>{-3});

  CHECK(base_index(even) == 0);
  CHECK(base_index(odd) == 1);
  CHECK(base_index(dh) == 3);
  CHECK(base_index(da) == -3);
}

TEST_CASE("basis norms: principal flat, ratio recursion elsewhere") {
  CHECK(basis_norm_sq(principal(2.0), 10) == doctest::Approx(1.0));
  CHECK(basis_norm_sq(principal(2.0), -10) == doctest::Approx(1.0));

  // complementary nu=0.5: ||u_2||^2 = (1-0.5)/(1+0.5) = 1/3
  const RepParams c = complementary(0.5);
  CHECK(basis_norm_sq(c, 2) == doctest::Approx(1.0 / 3.0));
  CHECK(basis_norm_sq(c, -2) == doctest::Approx(1.0 / 3.0));
  CHECK(basis_norm_sq(c, 0) == doctest::Approx(1.0));

  // base index norm 1 in every model
  for (const RepParams& p :
       {principal(1.0), principal(1.0, Parity::Minus), complementary(-0.6),
        discrete(1), discrete(4), discrete(-3)}) {
    CHECK(basis_norm_sq(p, base_index(p)) == doctest::Approx(1.0));
  }

  // antiholomorphic norms mirror the holomorphic ones
  for (int k = 4; k <= 40; k += 2) {
    CHECK(log_basis_norm_sq(discrete(-3), -k - 1) ==
          doctest::Approx(log_basis_norm_sq(discrete(3), k + 1)));
  }

  CHECK_THROWS_AS(basis_norm_sq(discrete(3), 2), ModelError);
}

TEST_CASE("recursion agrees with the closed product form up to k = 200") {
  // direct product over the running index, starting at the base
  auto closed = [](const RepParams& p, int k) {
    if (p.series() == Series::Principal) return 1.0;
    double nu = p.nu().real();
    if (p.series() == Series::DiscreteAntiholomorphic) nu = -nu;
    double prod = 1.0;
    for (int j = std::abs(base_index(p)) + 2; j <= std::abs(k); j += 2) {
      prod *= (j - 1 - nu) / (j - 1 + nu);
    }
    return std::abs(prod);
  };
  for (const RepParams& p :
       {principal(2.0), principal(1.0, Parity::Minus), complementary(0.3),
        complementary(-0.6), discrete(1), discrete(5), discrete(-2)}) {
    for (int k : IndexSet(p, 200).enumerate()) {
      CHECK(basis_norm_sq(p, k) == doctest::Approx(closed(p, k)).epsilon(1e-12));
    }
  }

  // profile helper matches the per-index recursion
  const RepParams c = complementary(-0.6);
  const auto prof = log_basis_norm_sq_profile(c, 100);
  for (int k = 0; k <= 100; k += 2) {
    CHECK(prof[k / 2] == doctest::Approx(log_basis_norm_sq(c, k)));
  }
}

TEST_CASE("complementary norms stay inside the (1+k)^{-nu} band") {
  for (double nu : {0.3, -0.6, 0.85}) {
    const RepParams p = complementary(nu, 0.9);
    double lo = 1e300, hi = 0.0;
    for (int k = 2; k <= 200; k += 2) {
      const double ref = (1.0 - nu) / (1.0 + nu) * std::pow(1.0 + k, -nu);
      const double r = basis_norm_sq(p, k) / ref;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    // fitted band constant independent of k
    const double C = std::max(hi, 1.0 / lo);
    CHECK(C < 10.0);
    CHECK(hi / lo < 5.0);  // the band does not drift with k
  }
}

TEST_CASE("sobolev norm formula and monotonicity") {
  const RepParams p1 = principal(1.0, Parity::Minus);  // mu = 2
  CHECK(sobolev_norm(CoeffVector::basis(p1, 3), 1.0) ==
        doctest::Approx(std::sqrt(21.0)));

  CHECK(sobolev_norm(CoeffVector(p1), 2.0) == 0.0);
  for (const RepParams& p : {principal(2.0), complementary(0.3), discrete(2)}) {
    CHECK(sobolev_norm(CoeffVector::basis(p, base_index(p)), 0.0) ==
          doctest::Approx(1.0));
  }

  // ||f||_0^2 = sum ||u_k||^2 |f_k|^2 exactly
  const RepParams c = complementary(0.5);
  CoeffVector f(c);
  f.set(0, Complex{1.0, 2.0});
  f.set(2, Complex{0.0, -3.0});
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(std::sqrt(5.0 + 9.0 / 3.0)));

  // monotone in s (weights 1+mu+2k^2 >= 1 on every index set)
  std::mt19937_64 rng(7);
  std::normal_distribution<double> N;
  for (const RepParams& p : {principal(1.0), complementary(-0.6), discrete(3)}) {
    CoeffVector g(p);
    for (int k : IndexSet(p, 30).enumerate()) g.set(k, Complex{N(rng), N(rng)});
    double prev = sobolev_norm(g, 0.0);
    for (double s : {0.5, 1.0, 2.0, 3.5}) {
      const double cur = sobolev_norm(g, s);
      CHECK(cur >= prev * (1.0 - 1e-12));
      prev = cur;
    }
  }
}

TEST_CASE("equivalent norm stays within a bounded band of the true norm") {
  const RepParams pc = complementary(0.5);
  CHECK(equiv_sobolev_norm(CoeffVector::basis(pc, 2), 0.0) ==
        doctest::Approx(std::pow(3.0, -0.25)));
  CHECK(equiv_sobolev_norm(CoeffVector::basis(principal(2.0), 4), 0.0) ==
        doctest::Approx(1.0));
  CHECK(equiv_sobolev_norm(CoeffVector(pc), 1.0) == 0.0);

  for (const RepParams& p :
       {principal(2.0), complementary(0.3), complementary(-0.6), discrete(2),
        discrete(-4)}) {
    for (double s : {0.0, 1.0, 2.5}) {
      double lo = 1e300, hi = 0.0;
      for (int k : IndexSet(p, 500).enumerate()) {
        const CoeffVector u = CoeffVector::basis(p, k);
        const double r = equiv_sobolev_norm(u, s) / sobolev_norm(u, s);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      CHECK(hi < 1e3);
      CHECK(lo > 1e-3);
    }
  }
}

TEST_CASE("theta powers") {
  const RepParams p = principal(2.0, Parity::Minus);
  CoeffVector f = CoeffVector::basis(p, 3);
  CHECK(theta_power_apply(f, 0.0) == f);

  // Theta^2 u_3 = (3i)^2 u_3 = -9 u_3
  const CoeffVector t2 = theta_power_apply(f, 2.0);
  CHECK(t2.at(3).real() == doctest::Approx(-9.0));
  CHECK(t2.at(3).imag() == doctest::Approx(0.0));

  const CoeffVector t1 = theta_power_apply(f, 1.0);
  CHECK(t1.at(3) == Complex{0.0, 3.0});

  // fractional powers act on magnitudes
  const CoeffVector th = theta_power_apply(f, 2.5);
  CHECK(std::abs(th.at(3)) == doctest::Approx(std::pow(3.0, 2.5)));

  // k = 0 is annihilated for p > 0
  const RepParams pe = principal(2.0);
  CHECK(theta_power_apply(CoeffVector::basis(pe, 0), 1.0).empty());

  // negative index, odd power keeps the exact phase
  CoeffVector g = CoeffVector::basis(pe, -2);
  CHECK(theta_power_apply(g, 3.0).at(-2) == Complex{0.0, 8.0});  // (-2i)^3
}

TEST_CASE("restriction keeps the half line and is idempotent") {
  const RepParams p = principal(2.0);
  CoeffVector f(p);
  f.set(2, Complex{1.0, 0.0});
  f.set(6, Complex{1.0, 0.0});
  CHECK(restrict(f, 4).entries().size() == 1);
  CHECK(restrict(f, 4).at(6) == Complex{1.0, 0.0});
  CHECK(restrict(f, 2) == f);

  CoeffVector g(p);
  g.set(-4, Complex{1.0, 0.0});
  g.set(2, Complex{1.0, 0.0});
  CHECK(restrict(g, -2).at(-4) == Complex{1.0, 0.0});
  CHECK(restrict(g, -2).support_size() == 1);

  CHECK_THROWS_AS(restrict(f, 0), ModelError);
  CHECK_THROWS_AS(restrict(f, 3), ModelError);

  std::mt19937_64 rng(11);
  std::normal_distribution<double> N;
  for (const RepParams& q : {principal(1.0), complementary(0.3), discrete(2)}) {
    CoeffVector h(q);
    for (int k : IndexSet(q, 40).enumerate()) h.set(k, Complex{N(rng), N(rng)});
    for (int n : {4, 10}) {
      const int nn = index_in_model(q, n) ? n : n + 1;
      const CoeffVector r1 = restrict(h, nn);
      CHECK(restrict(r1, nn) == r1);
      for (double s : {0.0, 1.5}) {
        CHECK(sobolev_norm(r1, s) <= sobolev_norm(h, s) * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("coeff vector model discipline") {
  const RepParams p = principal(2.0);
  CoeffVector f(p);
  CHECK_THROWS_AS(f.set(3, Complex{1.0, 0.0}), ModelError);
  f.set(2, Complex{1.0, 0.0});
  f.add(2, Complex{-1.0, 0.0});
  CHECK(f.empty());  // exact zeros erase

  CoeffVector g(complementary(0.3));
  g.set(2, Complex{1.0, 0.0});
  CHECK_THROWS_AS(f.add_scaled(g, Complex{1.0, 0.0}), ModelError);
}
