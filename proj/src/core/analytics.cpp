// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#include "analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "core_math.hpp"
#include "error.hpp"

namespace secwsn {

namespace {

constexpr double kClampSlack = 1e-8;
constexpr double kPi = std::numbers::pi;

Outage clamp_probability(double raw) {
  Outage out{raw, OutageFlag::none};
  if (raw < -kClampSlack || raw > 1.0 + kClampSlack)
    out.flag = OutageFlag::clamped;
  if (raw < 0.0) out.value = 0.0;
  if (raw > 1.0) out.value = 1.0;
  return out;
}

void check_cop_args(const NetworkConfig& cfg, int k, double beta_t) {
  cfg.validate();
  require(k >= 1 && k <= cfg.K, ErrorCode::domain,
          "sensor index k must lie in [1, K]");
  require(beta_t > 0.0 && std::isfinite(beta_t), ErrorCode::domain,
          "COP threshold beta_t must be finite and > 0");
}

void check_sop_args(const NetworkConfig& cfg, double beta_e) {
  cfg.validate();
  require(beta_e > 0.0 && std::isfinite(beta_e), ErrorCode::domain,
          "SOP threshold beta_e must be finite and > 0");
}

double log_omega(double mu, double tau1, double tau2, double alpha) {
  if (tau1 == 0.0) return std::lgamma(mu + 1.0) - (mu + 1.0) * std::log(tau2);
  return math::log_omega_integral({mu, tau1, tau2, alpha});
}

// Upsilon table indexed [p][n], 1 <= n <= p <= max_p.
std::vector<std::vector<double>> upsilon_table(int max_p, double delta) {
  std::vector<std::vector<double>> table(max_p + 1);
  for (int p = 1; p <= max_p; ++p) {
    table[p].assign(p + 1, 0.0);
    for (int n = 1; n <= p; ++n) table[p][n] = math::upsilon(p, n, delta);
  }
  return table;
}

}  // namespace

Outage cop_general(const NetworkConfig& cfg, double rho, int k, double beta_t) {
  check_cop_args(cfg, k, beta_t);
  const auto dens = derive_densities(cfg, rho);
  const auto pl = math::phi_const(cfg.alpha);
  const int K = cfg.K;
  const int M_k = cfg.M_c - K + k;
  const double half_alpha = cfg.alpha / 2.0;

  const double tau1 = cfg.omega * beta_t / cfg.P_a;
  const double interference = pl.phi * dens.lambda_o * std::pow(beta_t, pl.delta);
  const double log_g = std::log(pl.delta * interference);
  const double log_tau1 = tau1 > 0.0 ? std::log(tau1) : 0.0;
  const auto ups = upsilon_table(M_k - 1, pl.delta);

  // Omega cache keyed by (m - p, n) for the current l; mu = (alpha/2)(m-p) + n.
  std::vector<double> log_omega_cache(M_k * M_k);

  math::KahanSum outer;
  for (int l = 0; l < k; ++l) {
    const double tau2 = interference + kPi * cfg.lambda_c * (K - k + l + 1);
    std::fill(log_omega_cache.begin(), log_omega_cache.end(),
              std::numeric_limits<double>::quiet_NaN());
    auto cached = [&](int j, int n) {
      double& slot = log_omega_cache[j * M_k + n];
      if (std::isnan(slot)) slot = log_omega(half_alpha * j + n, tau1, tau2, cfg.alpha);
      return slot;
    };

    math::KahanSum inner;
    for (int m = 0; m < M_k; ++m) {
      const double log_m_fact = std::lgamma(m + 1.0);
      for (int p = 0; p <= m; ++p) {
        const int j = m - p;
        if (j > 0 && tau1 == 0.0) continue;
        const double log_coef =
            std::log(math::binomial(m, p)) - log_m_fact + j * log_tau1;
        if (p == 0) {
          inner += std::exp(log_coef + cached(j, 0));
          continue;
        }
        for (int n = 1; n <= p; ++n)
          inner += std::exp(log_coef + n * log_g + std::log(ups[p][n]) + cached(j, n));
      }
    }
    const double weight = math::binomial(k - 1, l);
    outer += (l % 2 == 0 ? weight : -weight) * inner.value();
  }
  const double prefactor = kPi * cfg.lambda_c * k * math::binomial(K, k);
  return clamp_probability(1.0 - prefactor * outer.value());
}

Outage cop_interference_limited(const NetworkConfig& cfg, double rho, int k,
                                double beta_t) {
  check_cop_args(cfg, k, beta_t);
  const auto dens = derive_densities(cfg, rho);
  const auto pl = math::phi_const(cfg.alpha);
  const int K = cfg.K;
  const int M_k = cfg.M_c - K + k;
  const double interference = pl.phi * dens.lambda_o * std::pow(beta_t, pl.delta);
  const double g = pl.delta * interference;
  const auto ups = upsilon_table(M_k - 1, pl.delta);

  math::KahanSum outer;
  for (int l = 0; l < k; ++l) {
    const double tau2 = interference + kPi * cfg.lambda_c * (K - k + l + 1);
    const double ratio = g / tau2;
    math::KahanSum bracket;
    bracket += 1.0;
    for (int m = 1; m < M_k; ++m) {
      double ratio_pow = 1.0;
      for (int n = 1; n <= m; ++n) {
        ratio_pow *= ratio;
        bracket += std::exp(std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) *
                   ratio_pow * ups[m][n];
      }
    }
    const double weight = math::binomial(k - 1, l) / tau2;
    outer += (l % 2 == 0 ? weight : -weight) * bracket.value();
  }
  const double prefactor = kPi * cfg.lambda_c * k * math::binomial(K, k);
  return clamp_probability(1.0 - prefactor * outer.value());
}

CopCoefficients cop_coefficients(const NetworkConfig& cfg, double rho,
                                 double beta_e) {
  cfg.validate();
  require(beta_e >= 0.0 && std::isfinite(beta_e), ErrorCode::domain,
          "beta_e must be finite and >= 0");
  const auto dens = derive_densities(cfg, rho);
  const auto pl = math::phi_const(cfg.alpha);
  CopCoefficients c;
  c.alpha = cfg.alpha;
  c.delta = pl.delta;
  c.beta_e = beta_e;
  c.B = beta_e / (1.0 + beta_e);
  const double scale = pl.phi * dens.lambda_o / (kPi * cfg.lambda_c);
  for (int k = 1; k <= cfg.K; ++k) {
    SensorCoefficients s;
    s.M = cfg.M_c - cfg.K + k;
    s.Lambda = math::lambda_coeff(cfg.K, k);
    s.Xi = math::xi_coeff(s.M, pl.delta);
    s.A = scale * s.Lambda * s.Xi;
    c.sensors.push_back(s);
  }
  return c;
}

Outage cop_low_approx(const NetworkConfig& cfg, double rho, int k,
                      double beta_t) {
  check_cop_args(cfg, k, beta_t);
  const auto coeffs = cop_coefficients(cfg, rho, 0.0);
  const auto& s = coeffs.sensors[k - 1];
  const double raw = s.A * std::pow(beta_t, coeffs.delta);
  Outage out{std::min(raw, 1.0), OutageFlag::none};
  if (raw > 1.0) out.flag = OutageFlag::clamped;
  return out;
}

Outage sop_general(const NetworkConfig& cfg, double rho, double beta_e) {
  check_sop_args(cfg, beta_e);
  const auto dens = derive_densities(cfg, rho);
  const auto pl = math::phi_const(cfg.alpha);
  const double zeta1 = cfg.omega * beta_e / cfg.P_a;
  const double zeta2 =
      pl.phi * dens.lambda_j * std::pow(cfg.P_j * beta_e / cfg.P_a, pl.delta);
  if (zeta1 == 0.0 && zeta2 == 0.0) return {1.0, OutageFlag::degenerate};

  const double half_alpha = cfg.alpha / 2.0;
  const double log_z1 = zeta1 > 0.0 ? std::log(zeta1) : 0.0;
  const double log_z2 = zeta2 > 0.0 ? std::log(zeta2) : 0.0;
  math::KahanSum sum;
  for (int m = 1; m <= cfg.M_e; ++m) {
    if (m > 1 && zeta1 == 0.0) break;
    for (int n = 0; n <= cfg.M_e - m; ++n) {
      if (n > 0 && zeta2 == 0.0) break;
      const double u = half_alpha * (m - 1) + n;
      const double log_term = (m - 1) * log_z1 + n * log_z2 -
                              std::lgamma(static_cast<double>(m)) -
                              std::lgamma(n + 1.0) +
                              log_omega(u, zeta1, zeta2, cfg.alpha);
      sum += std::exp(log_term);
    }
  }
  return clamp_probability(-std::expm1(-kPi * cfg.lambda_e * sum.value()));
}

Outage sop_interference_limited(const NetworkConfig& cfg, double rho,
                                double beta_e) {
  check_sop_args(cfg, beta_e);
  const auto dens = derive_densities(cfg, rho);
  if (rho == 0.0) return {1.0, OutageFlag::degenerate};
  const auto pl = math::phi_const(cfg.alpha);
  const double exponent = kPi * cfg.lambda_e * cfg.M_e /
                          (pl.phi * rho * dens.lambda_i) *
                          std::pow(cfg.P_a / (cfg.P_j * beta_e), pl.delta);
  return clamp_probability(-std::expm1(-exponent));
}

Outage sop(const NetworkConfig& cfg, double rho, double beta_e, SopModel model) {
  return model == SopModel::general ? sop_general(cfg, rho, beta_e)
                                    : sop_interference_limited(cfg, rho, beta_e);
}

}  // namespace secwsn
