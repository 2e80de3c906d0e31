// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#include "core_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "error.hpp"

namespace secwsn::math {

namespace {

constexpr double kQuadratureTolerance = 1e-12;
constexpr unsigned kQuadratureDepth = 24;

// ln of int_0^inf exp(log_f(x)) dx. The half line is rescaled by `scale` (a
// point inside the bulk of the integrand) and mapped to (0, 1) through
// x = scale * u / (1 - u). `log_shift` is subtracted inside the exponential
// and added back to the result so the integrand stays O(1).
template <class LogIntegrand>
double log_integrate_half_line(const LogIntegrand& log_f, double scale,
                               double log_shift) {
  auto mapped = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double one_minus = 1.0 - u;
    const double x = scale * u / one_minus;
    const double lf = log_f(x);
    if (!std::isfinite(lf)) return 0.0;
    return std::exp(lf - log_shift) * scale / (one_minus * one_minus);
  };
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          mapped, 0.0, 1.0, kQuadratureDepth, kQuadratureTolerance, &error);
  if (!(value > 0.0)) return -std::numeric_limits<double>::infinity();
  return log_shift + std::log(value);
}

// Root s of tau1 s^(alpha/2) + tau2 s = target (strictly increasing in s).
double characteristic_scale(double tau1, double tau2, double alpha,
                            double target) {
  const double half_alpha = alpha / 2.0;
  auto own_root = [&](double tau, double power, double level) {
    return tau > 0.0 ? std::pow(level / tau, 1.0 / power)
                     : std::numeric_limits<double>::infinity();
  };
  double hi = std::min(own_root(tau1, half_alpha, target),
                       own_root(tau2, 1.0, target));
  double lo = std::min(own_root(tau1, half_alpha, target / 2.0),
                       own_root(tau2, 1.0, target / 2.0));
  for (int it = 0; it < 60 && hi / lo > 1.0 + 1e-6; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (tau1 * std::pow(mid, half_alpha) + tau2 * mid < target)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

void check_omega(const OmegaParams& p) {
  require(p.mu >= 0.0 && std::isfinite(p.mu), ErrorCode::domain,
          "omega: mu must be finite and >= 0");
  require(p.tau1 >= 0.0 && p.tau2 >= 0.0, ErrorCode::domain,
          "omega: tau1 and tau2 must be >= 0");
  require(p.alpha > 2.0, ErrorCode::domain, "omega: alpha must exceed 2");
  require(p.tau1 > 0.0 || p.tau2 > 0.0, ErrorCode::divergent,
          "omega: integral diverges for tau1 = tau2 = 0");
}

}  // namespace

PathLossDerived phi_const(double alpha) {
  require(alpha > 2.0 && std::isfinite(alpha), ErrorCode::domain,
          "path-loss exponent must satisfy alpha > 2");
  const double delta = 2.0 / alpha;
  return {alpha, delta,
          std::numbers::pi * std::tgamma(1.0 + delta) * std::tgamma(1.0 - delta)};
}

double binomial(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, ErrorCode::domain,
          "binomial: need 0 <= k <= n");
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

double upsilon(int p, int n, double delta) {
  require(p >= 1 && n >= 1 && n <= p, ErrorCode::domain,
          "upsilon: need 1 <= n <= p");
  const int picks = p - n;
  if (picks == 0) return 1.0;
  // paths[i]: sum over ascending i-element sequences drawn from {1..q}.
  std::vector<double> paths(picks + 1, 0.0);
  paths[0] = 1.0;
  for (int q = 1; q <= p - 1; ++q) {
    for (int i = std::min(picks, q); i >= 1; --i)
      paths[i] += paths[i - 1] * (q - delta * (q - i + 1));
  }
  return paths[picks];
}

double omega_gamma(double mu, double tau2) {
  require(tau2 > 0.0, ErrorCode::divergent, "omega: tau2 must be > 0");
  return std::exp(std::lgamma(mu + 1.0) - (mu + 1.0) * std::log(tau2));
}

double log_omega_integral(const OmegaParams& p) {
  check_omega(p);
  const double target = std::max(1.0, p.mu);
  const double scale = characteristic_scale(p.tau1, p.tau2, p.alpha, target);
  const double half_alpha = p.alpha / 2.0;
  auto log_f = [&](double x) {
    const double power = p.mu == 0.0 ? 0.0 : p.mu * std::log(x);
    return power - p.tau1 * std::pow(x, half_alpha) - p.tau2 * x;
  };
  const double log_shift =
      p.mu * std::log(scale) - (p.mu >= 1.0 ? target : 0.0);
  return log_integrate_half_line(log_f, scale, log_shift);
}

double omega_integral(const OmegaParams& params) {
  return std::exp(log_omega_integral(params));
}

namespace {

double log_pcf_scaled(double nu, double z) {
  require(nu > 0.0, ErrorCode::domain, "parabolic cylinder: nu must be > 0");
  if (nu < 1.0 && z >= 0.0) {
    // Integrand is singular at 0; step up with the three-term recurrence.
    const double a = std::log(nu + 1.0) + log_pcf_scaled(nu + 2.0, z);
    if (z == 0.0) return a;
    const double b = std::log(z) + log_pcf_scaled(nu + 1.0, z);
    const double hi = std::max(a, b);
    return hi + std::log(std::exp(a - hi) + std::exp(b - hi));
  }
  const double mu = nu - 1.0;
  const double target = std::max(1.0, mu);
  // t^2/2 + z t = target
  const double scale = -z + std::sqrt(z * z + 2.0 * target);
  auto log_f = [&](double t) {
    const double power = mu == 0.0 ? 0.0 : mu * std::log(t);
    return power - z * t - 0.5 * t * t;
  };
  const double log_shift = mu * std::log(scale) - (mu >= 1.0 ? target : 0.0);
  return log_integrate_half_line(log_f, scale, log_shift) - std::lgamma(nu);
}

}  // namespace

double parabolic_cylinder_d_scaled(double nu, double z) {
  return std::exp(log_pcf_scaled(nu, z));
}

double parabolic_cylinder_d(double nu, double z) {
  return std::exp(log_pcf_scaled(nu, z) - z * z / 4.0);
}

double omega_closed_form_alpha4(const OmegaParams& p) {
  check_omega(p);
  require(p.alpha == 4.0, ErrorCode::unsupported,
          "parabolic-cylinder form of Omega requires alpha = 4");
  if (p.tau1 == 0.0) return omega_gamma(p.mu, p.tau2);
  const double z = p.tau2 / std::sqrt(2.0 * p.tau1);
  // exp(tau2^2 / (8 tau1)) cancels the e^(-z^2/4) inside D; both are kept
  // symbolically and evaluated in log space.
  const double log_value = -(p.mu + 1.0) / 2.0 * std::log(2.0 * p.tau1) +
                           std::lgamma(p.mu + 1.0) +
                           p.tau2 * p.tau2 / (8.0 * p.tau1) +
                           (log_pcf_scaled(p.mu + 1.0, z) - z * z / 4.0);
  return std::exp(log_value);
}

double lambda_coeff(int K, int k) {
  require(K >= 1 && K <= kMaxScheduled, ErrorCode::domain,
          "lambda_coeff: K must be in [1, " + std::to_string(kMaxScheduled) + "]");
  require(k >= 1 && k <= K, ErrorCode::domain, "lambda_coeff: need 1 <= k <= K");
  KahanSum sum;
  for (int l = 0; l < k; ++l) {
    const double d = K - k + l + 1;
    const double term = binomial(k - 1, l) / (d * d);
    sum += (l % 2 == 0) ? term : -term;
  }
  return k * binomial(K, k) * sum.value();
}

double xi_coeff(int M, double delta) {
  require(M >= 1, ErrorCode::domain, "xi_coeff: M must be >= 1");
  require(delta > 0.0 && delta < 1.0, ErrorCode::domain,
          "xi_coeff: delta must lie in (0, 1)");
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < M; ++m) {
    term *= (m - 1 - delta) / m;
    sum += term;
  }
  return sum;
}

double ordered_distance_pdf(double r, int k, int K, double lambda_c) {
  require(K >= 1 && K <= kMaxScheduled && k >= 1 && k <= K, ErrorCode::domain,
          "ordered_distance_pdf: need 1 <= k <= K <= 30");
  require(r >= 0.0 && lambda_c > 0.0, ErrorCode::domain,
          "ordered_distance_pdf: need r >= 0 and lambda_c > 0");
  const double area = std::numbers::pi * lambda_c * r * r;
  KahanSum sum;
  for (int l = 0; l < k; ++l) {
    const double term = binomial(k - 1, l) * std::exp(-area * (K - k + l + 1));
    sum += (l % 2 == 0) ? term : -term;
  }
  const double value =
      2.0 * k * binomial(K, k) * std::numbers::pi * lambda_c * r * sum.value();
  return std::max(value, 0.0);
}

void sample_ordered_distances(double lambda_c, Philox4x32& rng,
                              std::span<double> out) {
  const double inv = 1.0 / (std::numbers::pi * lambda_c);
  for (double& r : out) r = std::sqrt(rng.exponential() * inv);
  std::sort(out.begin(), out.end());
}

std::vector<double> sample_ordered_distances(int K, double lambda_c,
                                             Philox4x32& rng) {
  require(K >= 1, ErrorCode::domain, "sample_ordered_distances: K must be >= 1");
  require(lambda_c > 0.0, ErrorCode::domain,
          "sample_ordered_distances: lambda_c must be > 0");
  std::vector<double> out(K);
  sample_ordered_distances(lambda_c, rng, out);
  return out;
}

}  // namespace secwsn::math
