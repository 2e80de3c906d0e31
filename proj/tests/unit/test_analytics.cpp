// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "analytics.hpp"
#include "core_math.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace secwsn;

namespace {

constexpr double kPi = std::numbers::pi;

NetworkConfig fig2() {
  NetworkConfig c;
  c.lambda_s = 1.0;
  c.lambda_c = 0.01;
  c.lambda_e = 1e-4;
  c.K = 3;
  c.M_c = 8;
  c.M_e = 2;
  c.P_a = 10.0;
  c.P_j = 10.0;
  c.omega = 1.0;
  c.alpha = 4.0;
  return c;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// General COP written out directly with the alpha = 4 parabolic-cylinder Omega
// and brute-force Upsilon.
double cop_alpha4_reference(const NetworkConfig& c, double rho, int k, double beta) {
  const double delta = 0.5;
  const double phi = kPi * kPi / 2.0;
  const double la = c.K * c.lambda_c, li = c.lambda_s - la;
  const double lo = la + std::sqrt(c.P_j / c.P_a) * rho * li;
  const double tau1 = c.omega * beta / c.P_a;
  const double g = delta * phi * lo * std::sqrt(beta);
  const int M = c.M_c - c.K + k;
  double outer = 0.0;
  for (int l = 0; l < k; ++l) {
    const double tau2 = phi * lo * std::sqrt(beta) + kPi * c.lambda_c * (c.K - k + l + 1);
    auto Om = [&](double mu) { return math::omega_closed_form_alpha4({mu, tau1, tau2, 4.0}); };
    double inner = 0.0;
    for (int m = 0; m < M; ++m)
      for (int p = 0; p <= m; ++p) {
        const double pre = oracle::binom(m, p) / std::tgamma(m + 1.0) * std::pow(tau1, m - p);
        if (p == 0) {
          inner += pre * Om(2.0 * m);
        } else {
          double s = 0.0;
          for (int n = 1; n <= p; ++n)
            s += std::pow(g, n) * Om(2.0 * (m - p) + n) * oracle::upsilon_brute(p, n, delta);
          inner += pre * s;
        }
      }
    outer += oracle::binom(k - 1, l) * (l % 2 ? -1.0 : 1.0) * inner;
  }
  return 1.0 - kPi * c.lambda_c * k * oracle::binom(c.K, k) * outer;
}

// General SOP with the alpha = 4 parabolic-cylinder Omega.
double sop_alpha4_reference(const NetworkConfig& c, double rho, double beta) {
  const double phi = kPi * kPi / 2.0;
  const double lj = rho * (c.lambda_s - c.K * c.lambda_c);
  const double z1 = c.omega * beta / c.P_a;
  const double z2 = phi * lj * std::sqrt(c.P_j * beta / c.P_a);
  double s = 0.0;
  for (int m = 1; m <= c.M_e; ++m)
    for (int n = 0; n <= c.M_e - m; ++n)
      s += std::pow(z1, m - 1) * std::pow(z2, n) / (std::tgamma(m) * std::tgamma(n + 1.0)) *
           math::omega_closed_form_alpha4({2.0 * (m - 1) + n, z1, z2, 4.0});
  return -std::expm1(-kPi * c.lambda_e * s);
}

}  // namespace

TEST_CASE("cop_general vanishes at zero threshold without noise") {
  auto c = fig2();
  c.omega = 0.0;
  for (int k = 1; k <= 3; ++k) CHECK(cop_general(c, 0.05, k, 1e-12).value < 1e-5);
}

TEST_CASE("cop_general with omega = 0 equals the interference-limited form") {
  auto c = fig2();
  c.omega = 0.0;
  for (int k = 1; k <= 3; ++k)
    for (double beta : {0.01, 1.0, 10.0}) {
      const double g = cop_general(c, 0.05, k, beta).value;
      const double il = cop_interference_limited(c, 0.05, k, beta).value;
      CHECK(std::abs(g - il) <= 1e-8);
    }
}

TEST_CASE("cop_general agrees with the alpha = 4 closed-form route") {
  auto c = fig2();
  for (int K : {1, 2, 3})
    for (int k = 1; k <= K; ++k)
      for (double beta : {0.1, 1.0, 10.0}) {
        c.K = K;
        const double ref = cop_alpha4_reference(c, 0.05, k, beta);
        const double val = cop_general(c, 0.05, k, beta).value;
        CAPTURE(K);
        CAPTURE(k);
        CAPTURE(beta);
        CHECK(std::abs(val - ref) <= 1e-6 * std::max(ref, 1e-3));
      }
}

TEST_CASE("cop_interference_limited") {
  auto c = fig2();
  for (int k = 1; k <= 3; ++k) CHECK(cop_interference_limited(c, 0.05, k, 1e-14).value < 1e-5);
  // K = 1, M_c = 2 limit consistency.
  c.K = 1;
  c.M_c = 2;
  auto cn = c;
  cn.omega = 1e-12;
  for (double beta : {0.1, 1.0, 5.0})
    CHECK(rel(cop_general(cn, 0.05, 1, beta).value,
              cop_interference_limited(c, 0.05, 1, beta).value) <= 1e-4);
  // More FC antennas help.
  auto c8 = fig2(), c16 = fig2();
  c16.M_c = 16;
  for (double beta : {0.5, 2.0, 10.0})
    CHECK(cop_interference_limited(c16, 0.05, 1, beta).value <
          cop_interference_limited(c8, 0.05, 1, beta).value);
}

TEST_CASE("cop_low_approx") {
  auto c = fig2();
  c.K = 1;
  c.M_c = 2;
  const auto pl = math::phi_const(4.0);
  const auto d = derive_densities(c, 0.05);
  const double beta = 1e-4;
  // Lambda_1 = 1 for K = 1 and Xi_2 = 1 - delta.
  CHECK(cop_low_approx(c, 0.05, 1, beta).value ==
        doctest::Approx(pl.phi * d.lambda_o * std::sqrt(beta) / (kPi * c.lambda_c) * 0.5));

  auto f = fig2();
  for (int k = 1; k <= 3; ++k) {
    double prev = 0.0;
    for (double rho : {0.0, 0.05, 0.2, 0.8}) {
      const double v = cop_low_approx(f, rho, k, 1e-3).value;
      CHECK(v > prev);
      prev = v;
    }
    prev = 0.0;
    for (double beta : {1e-6, 1e-4, 1e-2}) {
      const double v = cop_low_approx(f, 0.05, k, beta).value;
      CHECK(v > prev);
      prev = v;
    }
    // Ratio tends to one as beta_t -> 0.
    for (double beta = 1e-3; beta > 1e-12; beta /= 10.0) {
      const double il = cop_interference_limited(f, 0.05, k, beta).value;
      if (il > 1e-3) continue;
      CHECK(cop_low_approx(f, 0.05, k, beta).value / il == doctest::Approx(1.0).epsilon(0.02));
    }
  }
  CHECK(cop_low_approx(f, 1.0, 1, 1e6).flag == OutageFlag::clamped);
  CHECK(cop_low_approx(f, 1.0, 1, 1e6).value == 1.0);
}

TEST_CASE("cop_coefficients") {
  auto c = fig2();
  const double be = 0.3;
  const auto co = cop_coefficients(c, 0.05, be);
  CHECK(co.B == doctest::Approx(be / 1.3));
  REQUIRE(co.sensors.size() == 3);
  for (int k = 1; k <= 3; ++k) {
    const auto& s = co.sensors[k - 1];
    CHECK(s.M == c.M_c - c.K + k);
    CHECK(s.Lambda == doctest::Approx(oracle::lambda_harmonic(3, k)));
    CHECK(s.Xi == doctest::Approx(oracle::xi_gamma_ratio(s.M, 0.5)));
    CHECK(s.A * std::pow(1e-3, 0.5) == doctest::Approx(cop_low_approx(c, 0.05, k, 1e-3).value));
  }
}

TEST_CASE("cop argument checks") {
  auto c = fig2();
  CHECK_THROWS_AS(cop_general(c, 0.05, 0, 1.0), Error);
  CHECK_THROWS_AS(cop_general(c, 0.05, 4, 1.0), Error);
  CHECK_THROWS_AS(cop_general(c, 0.05, 1, 0.0), Error);
  CHECK_THROWS_AS(cop_interference_limited(c, 0.05, 1, -1.0), Error);
}

TEST_CASE("cop_general monotonicity") {
  const auto base = fig2();
  auto grid_check = [](auto&& eval, std::initializer_list<double> values) {
    double prev = -1.0;
    for (double v : values) {
      const double p = eval(v);
      CHECK(p >= prev - 1e-12);
      prev = p;
    }
  };
  grid_check([&](double b) { return cop_general(base, 0.05, 1, b).value; }, {0.1, 0.5, 1, 3, 10});
  grid_check([&](double w) { auto c = base; c.omega = w; return cop_general(c, 0.05, 1, 1.0).value; },
             {0.0, 0.1, 1, 5, 20});
  grid_check([&](double r) { return cop_general(base, r, 1, 1.0).value; }, {0.0, 0.05, 0.2, 0.5, 1});
  grid_check([&](double l) { auto c = base; c.lambda_s = l; return cop_general(c, 0.05, 1, 1.0).value; },
             {0.5, 1, 2, 4, 8});
  // More antennas, fewer outages.
  grid_check([&](double M) { auto c = base; c.M_c = int(M); return -cop_general(c, 0.05, 1, 1.0).value; },
             {4, 6, 8, 12, 16});
}

TEST_CASE("interference-limited bounds") {
  const auto c = fig2();
  auto il = c;
  il.omega = 0.0;
  for (double beta : {0.1, 1.0, 10.0}) {
    CHECK(cop_interference_limited(c, 0.05, 1, beta).value <= cop_general(c, 0.05, 1, beta).value);
    CHECK(sop_interference_limited(c, 0.05, beta).value >= sop_general(c, 0.05, beta).value);
  }
}

TEST_CASE("sop_general") {
  auto c = fig2();
  c.lambda_e = 1e-12;
  CHECK(sop_general(c, 0.05, 1.0).value < 1e-8);
  c = fig2();
  c.omega = 0.0;
  for (double beta : {0.1, 1.0, 10.0})
    CHECK(std::abs(sop_general(c, 0.05, beta).value - sop_interference_limited(c, 0.05, beta).value) <=
          1e-8);
  const auto deg = sop_general(c, 0.0, 1.0);
  CHECK(deg.value == 1.0);
  CHECK(deg.flag == OutageFlag::degenerate);
  c = fig2();
  for (int Me : {1, 2, 3})
    for (double beta : {0.1, 1.0, 10.0}) {
      c.M_e = Me;
      CHECK(rel(sop_general(c, 0.05, beta).value, sop_alpha4_reference(c, 0.05, beta)) < 1e-6);
    }
}

TEST_CASE("sop_interference_limited") {
  auto c = fig2();
  c.K = 4;
  c.omega = 0.0;
  CHECK(sop_interference_limited(c, 0.05, 1.0).value == doctest::Approx(2.65e-3).epsilon(0.01));
  const double li = 0.96, phi = kPi * kPi / 2.0;
  CHECK(sop_interference_limited(c, 0.05, 1.0).value ==
        doctest::Approx(-std::expm1(-kPi * 1e-4 * 2 / (phi * 0.05 * li))).epsilon(1e-12));
  CHECK(sop_interference_limited(c, 0.05, 1e30).value < 1e-12);
  CHECK(sop_interference_limited(c, 1e-12, 1.0).value == doctest::Approx(1.0));
  CHECK(sop_interference_limited(c, 0.0, 1.0).flag == OutageFlag::degenerate);
}

TEST_CASE("sop monotonicity and exponential structure") {
  const auto base = fig2();
  for (auto model : {SopModel::general, SopModel::interference_limited}) {
    double prev = 2.0;
    for (double beta : {0.1, 1.0, 10.0, 100.0}) {
      const double p = sop(base, 0.05, beta, model).value;
      CHECK(p <= prev);
      prev = p;
    }
    prev = 2.0;
    for (double rho : {0.01, 0.05, 0.2, 1.0}) {
      const double p = sop(base, rho, 1.0, model).value;
      CHECK(p <= prev);
      prev = p;
    }
    prev = -1.0;
    for (double le : {1e-5, 1e-4, 1e-3}) {
      auto c = base;
      c.lambda_e = le;
      const double p = sop(c, 0.05, 1.0, model).value;
      CHECK(p >= prev);
      prev = p;
    }
    prev = -1.0;
    for (int Me : {1, 2, 3, 4}) {
      auto c = base;
      c.M_e = Me;
      const double p = sop(c, 0.05, 1.0, model).value;
      CHECK(p >= prev);
      prev = p;
    }
  }
  // log(1 - p) is proportional to lambda_e.
  auto c = base;
  c.lambda_e = 1e-4;
  const double a = std::log1p(-sop_general(c, 0.05, 1.0).value);
  c.lambda_e = 3e-4;
  const double b = std::log1p(-sop_general(c, 0.05, 1.0).value);
  CHECK(b / a == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("random configurations: omega -> 0 limits") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    NetworkConfig c;
    c.K = 1 + int(u(gen) * 4);
    c.M_c = c.K + 1 + int(u(gen) * 6);
    c.M_e = 1 + int(u(gen) * 3);
    c.lambda_c = 0.005 + 0.015 * u(gen);
    c.lambda_s = 0.5 + 1.5 * u(gen);
    c.lambda_e = 1e-4 * (1 + 9 * u(gen));
    c.P_a = 1 + 99 * u(gen);
    c.P_j = 1 + 99 * u(gen);
    c.alpha = 2.5 + 2.5 * u(gen);
    const double rho = 0.01 + 0.5 * u(gen);
    const double beta = std::pow(10.0, -1 + 2 * u(gen));
    const int k = 1 + int(u(gen) * c.K);
    auto il = c;
    il.omega = 0.0;
    c.omega = 1e-12;
    CAPTURE(trial);
    CHECK(rel(cop_general(c, rho, k, beta).value, cop_interference_limited(il, rho, k, beta).value) <= 1e-4);
    CHECK(rel(sop_general(c, rho, beta).value, sop_interference_limited(il, rho, beta).value) <= 1e-4);
  }
}
