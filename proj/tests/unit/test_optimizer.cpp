// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "analytics.hpp"
#include "error.hpp"
#include "optimizer.hpp"

using namespace secwsn;

namespace {

NetworkConfig fig5() {
  NetworkConfig c;
  c.lambda_s = 1.0;
  c.lambda_c = 0.01;
  c.lambda_e = 1e-4;
  c.K = 4;
  c.M_c = 16;
  c.M_e = 2;
  c.P_a = 10.0;
  c.P_j = dbm_to_linear(1.0);
  c.omega = 1.0;
  return c;
}

// Interior sub-optimal configuration.
NetworkConfig interior_base() {
  NetworkConfig c;
  c.K = 2;
  c.M_c = 4;
  c.lambda_e = 1e-6;
  c.P_a = 10.0;
  c.P_j = 0.1;
  return c;
}

NetworkConfig full_jamming_base() {
  NetworkConfig c;
  c.K = 1;
  c.M_c = 8;
  c.lambda_e = 1e-4;
  c.P_a = 10.0;
  c.P_j = dbm_to_linear(-30.0);
  return c;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("optimal_redundancy meets the SOP limit with equality") {
  const auto c = fig5();
  for (double rho : {0.01, 0.1, 0.5, 1.0})
    for (double eps : {0.01, 0.05, 0.1, 0.3}) {
      const double b = optimal_redundancy(c, rho, eps);
      CHECK(rel(sop_interference_limited(c, rho, b).value, eps) < 1e-9);
      const double g = optimal_redundancy(c, rho, eps, SopModel::general);
      CHECK(rel(sop_general(c, rho, g).value, eps) < 1e-8);
      // Noise only helps secrecy, so the general threshold is smaller.
      CHECK(g <= b * (1.0 + 1e-9));
    }
  // Without noise the bisection must land on the closed form.
  auto il = c;
  il.omega = 0.0;
  for (double rho : {0.02, 0.3})
    CHECK(rel(optimal_redundancy(il, rho, 0.1, SopModel::general), optimal_redundancy(il, rho, 0.1)) < 1e-7);
  double prev = INFINITY;
  for (double eps : {0.01, 0.02, 0.05, 0.1, 0.2, 0.5}) {
    const double b = optimal_redundancy(c, 0.1, eps);
    CHECK(b < prev);
    prev = b;
  }
  CHECK_THROWS_AS(optimal_redundancy(c, 0.0, 0.1), Error);
}

TEST_CASE("sensor throughput model and slope") {
  const double A = 0.3, B = 0.2, alpha = 4.0;
  for (double b : {0.01, 0.5, 2.0, 5.0}) {
    const double h = 1e-6 * b;
    const double fd = (sensor_throughput_model(A, B, alpha, b + h) -
                       sensor_throughput_model(A, B, alpha, b - h)) / (2 * h);
    CHECK(sensor_throughput_slope(A, B, alpha, b) == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK(sensor_throughput_model(A, B, alpha, 0.0) == 0.0);
}

TEST_CASE("optimal_secrecy_threshold against a dense grid") {
  struct Case {
    double A, B, alpha, sigma;
  };
  for (const Case c : {Case{0.3, 0.2, 4.0, 0.999999}, Case{0.1, 0.0, 3.0, 0.999999}, Case{0.5, 0.4, 5.0, 0.999999},
                       Case{0.3, 0.2, 4.0, 0.2}, Case{0.05, 0.1, 4.0, 0.1}}) {
    CAPTURE(c.A);
    CAPTURE(c.B);
    CAPTURE(c.alpha);
    CAPTURE(c.sigma);
    const auto r = optimal_secrecy_threshold(c.A, c.B, c.alpha, c.sigma);
    REQUIRE(r.feasible);
    const double delta = 2.0 / c.alpha;
    const double hi = std::min(std::pow(c.A, -1.0 / delta) - c.B, std::pow(c.sigma / c.A, 1.0 / delta) - c.B);
    CHECK(r.beta_s <= hi * (1 + 1e-12));
    double best = 0.0, arg = 0.0;
    const int n = 200000;
    for (int i = 1; i <= n; ++i) {
      const double b = hi * i / n;
      const double t = (1.0 - c.A * std::pow(b + c.B, delta)) * std::log2(1.0 + b);
      if (t > best) {
        best = t;
        arg = b;
      }
    }
    CHECK(r.throughput >= best - 1e-9);
    CHECK(std::abs(r.beta_s - arg) <= 2.0 * hi / n);
    CHECK(c.A * std::pow(r.beta_s + c.B, delta) <= c.sigma * (1 + 1e-12));
    if (!r.cap_active) CHECK(std::abs(sensor_throughput_slope(c.A, c.B, c.alpha, r.beta_s)) < 1e-6);
  }
  // A B^delta >= 1: no positive threshold keeps the outage below one.
  CHECK_FALSE(optimal_secrecy_threshold(2.0, 0.5, 4.0, 0.5).feasible);
  CHECK_FALSE(optimal_secrecy_threshold(0.5, 0.3, 4.0, 0.2).feasible);
}

TEST_CASE("optimal design respects constraints and matches a fine rho grid") {
  const auto c = fig5();
  for (double sigma : {0.1, 0.2}) {
    const OutageConstraints lim{sigma, 0.1};
    const auto d = optimal_design(c, lim);
    REQUIRE(d.feasible);
    CHECK(d.cop_ok);
    CHECK(d.sop_ok);
    CHECK(d.sop <= 0.1 * (1 + 1e-9));
    double best = 0.0;
    for (int i = 1; i <= 2000; ++i) best = std::max(best, optimal_throughput_at(c, i / 2000.0, lim));
    CHECK(d.T_sum >= best - 1e-6);
    double sum = 0.0;
    for (int k = 1; k <= c.K; ++k) {
      const auto& s = d.sensors[k - 1];
      if (!s.feasible) continue;
      sum += s.throughput;
      CHECK(s.cop_low <= sigma * (1 + 1e-9));
      CHECK(cop_low_approx(c, d.rho, k, s.beta_t).value == doctest::Approx(s.cop_low));
      CHECK(s.beta_t == doctest::Approx(s.beta_s + s.beta_e + s.beta_s * s.beta_e));
      CHECK(s.throughput == doctest::Approx((1.0 - s.cop_low) * s.R_s));
    }
    CHECK(sum == doctest::Approx(d.T_sum));
  }
}

TEST_CASE("sensor_throughput equals the rate times connection probability") {
  const auto c = fig5();
  for (double Rs : {0.5, 1.0, 2.0}) {
    const auto p = sensor_throughput(c, 0.05, 0.1, 2, Rs);
    const double be = optimal_redundancy(c, 0.05, 0.1);
    CHECK(p.beta_e == doctest::Approx(be));
    const double bt = (1 + be) * std::pow(2.0, Rs) - 1.0;
    CHECK(p.cop_low == doctest::Approx(cop_low_approx(c, 0.05, 2, bt).value));
    CHECK(p.throughput == doctest::Approx(std::max(0.0, 1.0 - p.cop_low) * Rs));
  }
}

TEST_CASE("sub-optimal rates hit both outage limits") {
  const auto c = interior_base();
  const OutageConstraints lim{0.1, 0.1};
  const auto aux = suboptimal_auxiliaries(c, lim);
  REQUIRE(aux.feasible);
  for (double rho : {aux.rho_min, 0.01, 0.3, 1.0}) {
    const auto r = suboptimal_rates(c, rho, lim);
    CHECK(rel(sop_interference_limited(c, rho, r.beta_e).value, 0.1) < 1e-9);
    CHECK(rel(r.beta_e, optimal_redundancy(c, rho, 0.1)) < 1e-9);
    for (int k = 1; k <= c.K; ++k)
      CHECK(rel(cop_low_approx(c, rho, k, r.beta_t[k - 1]).value, 0.1) < 1e-9);
  }
  // X/Y/Z form of the throughput.
  for (double rho : {0.01, 0.2, 0.9}) {
    const double h = aux.alpha / 2.0;
    double T = 0.0;
    for (double X : aux.X)
      T += std::max(0.0, 0.9 * std::log2((1 + X * std::pow(1 + aux.Y * rho, -h)) / (1 + aux.Z * std::pow(rho, -h))));
    CHECK(suboptimal_throughput(c, rho, lim).T_sum == doctest::Approx(T).epsilon(1e-10));
  }
  CHECK_THROWS_AS(suboptimal_rates(c, 0.0, lim), Error);
  // Below rho_min the blocking sensor is floored.
  const auto below = suboptimal_throughput(c, 0.5 * aux.rho_min, lim);
  CHECK(below.floored[aux.blocking_k - 1]);
  CHECK(below.per_sensor[aux.blocking_k - 1] == 0.0);
}

TEST_CASE("kappa and G") {
  SubOptAuxiliaries aux;
  aux.X = {1.0, 3.0};
  aux.Y = 1.0;
  aux.Z = 2.0;
  aux.alpha = 4.0;
  // shrink = 1.5^-2, X shrink = {4/9, 4/3}.
  const double k = 0.5 * (1.0 / (4.0 / 9.0 + 1.0) + 1.0 / (4.0 / 3.0 + 1.0));
  CHECK(kappa(0.5, aux) == doctest::Approx(k).epsilon(1e-14));
  CHECK(G_function(0.5, aux) == doctest::Approx(1.0 + 0.5 * k - std::pow(0.5, 3.0) * (1 - k) / 2.0).epsilon(1e-14));
  CHECK(G_function(1e-12, aux) == doctest::Approx(1.0).epsilon(1e-10));
  aux.X = {0.0};
  CHECK(kappa(0.7, aux) == 1.0);
  aux.X = {1e30};
  CHECK(kappa(0.7, aux) < 1e-29);
}

TEST_CASE("sign of G is the sign of dT/drho") {
  const auto c = interior_base();
  const OutageConstraints lim{0.1, 0.1};
  const auto aux = suboptimal_auxiliaries(c, lim);
  for (double rho = aux.rho_min * 1.01; rho < 1.0; rho *= 1.7) {
    const double h = 1e-6 * rho;
    const double dT = suboptimal_throughput(c, rho + h, lim).T_sum - suboptimal_throughput(c, rho - h, lim).T_sum;
    const double G = G_function(rho, aux);
    CAPTURE(rho);
    if (std::abs(G) > 1e-3) CHECK((G > 0) == (dT > 0));
  }
}

TEST_CASE("sub-optimal rho: the three cases") {
  const OutageConstraints lim{0.1, 0.1};
  {
    const auto c = interior_base();
    const auto r = suboptimal_rho(c, lim);
    REQUIRE(r.sub_case == SubOptCase::interior);
    CHECK(r.G_residual < 1e-9);
    const auto aux = suboptimal_auxiliaries(c, lim);
    const double T = suboptimal_throughput(c, r.rho, lim).T_sum;
    for (int i = 0; i <= 1000; ++i) {
      const double rho = aux.rho_min + (1.0 - aux.rho_min) * i / 1000.0;
      CHECK(suboptimal_throughput(c, rho, lim).T_sum <= T + 1e-9);
    }
  }
  {
    const auto r = suboptimal_rho(fig5(), lim);
    CHECK(r.sub_case == SubOptCase::lower_bound);
    CHECK(r.rho == doctest::Approx(suboptimal_auxiliaries(fig5(), lim).rho_min));
  }
  {
    const auto r = suboptimal_rho(full_jamming_base(), lim);
    CHECK(r.sub_case == SubOptCase::full_jamming);
    CHECK(r.rho == 1.0);
  }
  {
    auto c = fig5();
    const auto r = suboptimal_rho(c, {0.05, 0.05});
    CHECK(r.sub_case == SubOptCase::infeasible);
    CHECK(r.blocking_k >= 1);
    const auto d = suboptimal_design(c, {0.05, 0.05});
    CHECK_FALSE(d.feasible);
    CHECK(d.T_sum == 0.0);
  }
}

TEST_CASE("optimal scheme dominates the sub-optimal scheme") {
  for (const auto& c : {fig5(), interior_base(), full_jamming_base()})
    for (double sigma : {0.1, 0.2}) {
      const OutageConstraints lim{sigma, 0.1};
      const auto o = optimal_design(c, lim);
      const auto s = suboptimal_design(c, lim);
      CHECK(o.T_sum >= s.T_sum - 1e-9);
      if (s.feasible) {
        CHECK(s.cop_ok);
        CHECK(s.sop_ok);
      }
    }
}

TEST_CASE("rho monotonicity report") {
  const auto c = interior_base();
  const OutageConstraints lim{0.1, 0.1};
  const auto r = rho_monotonicity_report(c, lim, SweepParameter::lambda_e, {1e-6, 2e-6, 4e-6});
  CHECK(r.expected_direction == 1);
  CHECK(r.all_interior);
  CHECK(r.confirmed);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].rho < r.rows[1].rho);
  const auto s = rho_monotonicity_report(c, lim, SweepParameter::sigma, {0.05, 0.1, 0.2});
  CHECK(s.expected_direction == -1);
  CHECK(s.confirmed);
  // Non-interior rows are reported but never used as evidence.
  const auto f = rho_monotonicity_report(fig5(), lim, SweepParameter::sigma, {0.1, 0.2});
  CHECK_FALSE(f.all_interior);
  CHECK_FALSE(f.confirmed);
  CHECK(expected_rho_direction(SweepParameter::M_e) == 1);
  CHECK(expected_rho_direction(SweepParameter::power_ratio) == -1);
}
