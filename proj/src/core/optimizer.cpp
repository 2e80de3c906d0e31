// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#include "optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "core_math.hpp"
#include "error.hpp"

namespace secwsn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kRecheckSlack = 1e-6;

double log_inv_one_minus(double epsilon) { return -std::log1p(-epsilon); }

// Bisection for the sign change of f on [lo, hi] with f(lo) > 0 >= f(hi).
template <class F>
double bisect_decreasing(F f, double lo, double hi, double tol) {
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double rate(double beta) { return std::log2(1.0 + beta); }

}  // namespace

double optimal_redundancy(const NetworkConfig& cfg, double rho, double epsilon,
                          SopModel model) {
  require(epsilon > 0.0 && epsilon < 1.0, ErrorCode::domain,
          "epsilon must lie in (0, 1)");
  const auto dens = derive_densities(cfg, rho);
  if (model == SopModel::interference_limited) {
    require(rho > 0.0, ErrorCode::infeasible,
            "no jamming: interference-limited SOP is pinned at 1");
    const auto pl = math::phi_const(cfg.alpha);
    const double base = kPi * cfg.lambda_e * cfg.M_e /
                        (pl.phi * rho * dens.lambda_i * log_inv_one_minus(epsilon));
    return (cfg.P_a / cfg.P_j) * std::pow(base, cfg.alpha / 2.0);
  }
  constexpr double kLo = 1e-9;
  constexpr double kHi = 1e12;
  auto excess = [&](double log_beta) {
    return sop_general(cfg, rho, std::exp(log_beta)).value - epsilon;
  };
  if (excess(std::log(kLo)) <= 0.0) return kLo;
  require(excess(std::log(kHi)) <= 0.0, ErrorCode::infeasible,
          "SOP exceeds epsilon for every beta_e up to 1e12");
  double lo = std::log(kLo);
  double hi = std::log(kHi);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double e = excess(mid);
    if (std::abs(e) <= 1e-9 * epsilon) return std::exp(mid);
    if (e > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-15) break;
  }
  return std::exp(hi);
}

double sensor_throughput_model(double A, double B, double alpha, double beta_s) {
  return (1.0 - A * std::pow(beta_s + B, 2.0 / alpha)) * rate(beta_s);
}

double sensor_throughput_slope(double A, double B, double alpha, double beta_s) {
  const double delta = 2.0 / alpha;
  const double x = beta_s + B;
  return (1.0 - A * std::pow(x, delta)) / ((1.0 + beta_s) * kLn2) -
         A * delta * rate(beta_s) * std::pow(x, delta - 1.0);
}

SecrecyThreshold optimal_secrecy_threshold(double A, double B, double alpha,
                                           double sigma) {
  require(A > 0.0 && B >= 0.0 && B < 1.0 && alpha > 2.0, ErrorCode::domain,
          "need A > 0, 0 <= B < 1, alpha > 2");
  require(sigma > 0.0 && sigma < 1.0, ErrorCode::domain, "sigma must lie in (0, 1)");
  SecrecyThreshold out;
  const double half = alpha / 2.0;
  out.beta_s_max = std::pow(A, -half) - B;
  out.beta_s_cap = std::pow(sigma / A, half) - B;
  const double upper = std::min(out.beta_s_max, out.beta_s_cap);
  if (!(upper > 0.0)) return out;
  out.feasible = true;
  if (sensor_throughput_slope(A, B, alpha, upper) >= 0.0) {
    out.beta_s = upper;
    out.cap_active = true;
  } else {
    out.beta_s = bisect_decreasing(
        [&](double b) { return sensor_throughput_slope(A, B, alpha, b); }, 0.0,
        upper, 1e-10 * std::max(1.0, upper));
  }
  out.throughput = std::max(0.0, sensor_throughput_model(A, B, alpha, out.beta_s));
  return out;
}

SecrecyThreshold optimal_secrecy_threshold(const CopCoefficients& coeffs, int k,
                                           double sigma) {
  require(k >= 1 && k <= static_cast<int>(coeffs.sensors.size()),
          ErrorCode::domain, "sensor index k must lie in [1, K]");
  const double A = coeffs.sensors[k - 1].A * std::pow(1.0 + coeffs.beta_e, coeffs.delta);
  return optimal_secrecy_threshold(A, coeffs.B, coeffs.alpha, sigma);
}

namespace {

DesignResult infeasible_optimal(const NetworkConfig& cfg, double rho) {
  DesignResult r;
  r.scheme = Scheme::optimal;
  r.rho = rho;
  r.sensors.resize(cfg.K);
  return r;
}

}  // namespace

DesignResult optimal_design_at(const NetworkConfig& cfg, double rho,
                               const OutageConstraints& limits, SopModel model) {
  limits.validate();
  require(rho >= 0.0 && rho <= 1.0, ErrorCode::domain, "rho must lie in [0, 1]");
  double beta_e = 0.0;
  try {
    beta_e = optimal_redundancy(cfg, rho, limits.epsilon, model);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::infeasible) throw;
    return infeasible_optimal(cfg, rho);
  }
  const auto coeffs = cop_coefficients(cfg, rho, beta_e);
  DesignResult r;
  r.scheme = Scheme::optimal;
  r.rho = rho;
  r.sensors.resize(cfg.K);
  r.sop = sop(cfg, rho, beta_e, model).value;
  r.sop_ok = r.sop <= limits.epsilon + kRecheckSlack;
  r.cop_ok = true;
  math::KahanSum total;
  for (int k = 1; k <= cfg.K; ++k) {
    auto& s = r.sensors[k - 1];
    const auto th = optimal_secrecy_threshold(coeffs, k, limits.sigma);
    s.beta_e = beta_e;
    s.R_e = rate(beta_e);
    s.feasible = th.feasible;
    if (!th.feasible) continue;
    s.beta_s = th.beta_s;
    s.R_s = rate(th.beta_s);
    s.beta_t = beta_e + (1.0 + beta_e) * th.beta_s;
    s.R_t = s.R_s + s.R_e;
    s.throughput = th.throughput;
    s.cop_low = cop_low_approx(cfg, rho, k, s.beta_t).value;
    s.cop_il = cop_interference_limited(cfg, rho, k, s.beta_t).value;
    r.cop_ok = r.cop_ok && s.cop_low <= limits.sigma + kRecheckSlack;
    total += s.throughput;
  }
  r.T_sum = total.value();
  r.feasible = r.T_sum > 0.0;
  return r;
}

double optimal_throughput_at(const NetworkConfig& cfg, double rho,
                             const OutageConstraints& limits, SopModel model) {
  return optimal_design_at(cfg, rho, limits, model).T_sum;
}

DesignResult optimal_design(const NetworkConfig& cfg,
                            const OutageConstraints& limits,
                            double rho_grid_step, SopModel model) {
  limits.validate();
  require(rho_grid_step > 0.0 && rho_grid_step <= 0.1, ErrorCode::domain,
          "rho grid step must lie in (0, 0.1]");
  const int n = static_cast<int>(std::ceil(1.0 / rho_grid_step - 1e-9));
  double best_rho = 0.0;
  double best_T = -1.0;
  for (int i = 0; i <= n; ++i) {
    const double rho = std::min(1.0, i * rho_grid_step);
    const double T = optimal_throughput_at(cfg, rho, limits, model);
    if (T > best_T) {
      best_T = T;
      best_rho = rho;
    }
  }
  if (!(best_T > 0.0)) {
    auto r = infeasible_optimal(cfg, best_rho);
    return r;
  }

  // Golden-section refinement inside the neighbouring grid cells.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(0.0, best_rho - rho_grid_step);
  double b = std::min(1.0, best_rho + rho_grid_step);
  auto T = [&](double rho) { return optimal_throughput_at(cfg, rho, limits, model); };
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = T(c);
  double fd = T(d);
  while (b - a > 1e-5) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = T(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = T(d);
    }
  }
  const double refined = 0.5 * (a + b);
  const double refined_T = T(refined);
  // Ties go to the smaller rho.
  if (refined_T > best_T || (refined_T == best_T && refined < best_rho))
    best_rho = refined;
  return optimal_design_at(cfg, best_rho, limits, model);
}

SensorThroughputPoint sensor_throughput(const NetworkConfig& cfg, double rho,
                                        double epsilon, int k, double R_s,
                                        SopModel model) {
  require(R_s >= 0.0 && std::isfinite(R_s), ErrorCode::domain,
          "secrecy rate must be finite and >= 0");
  const double beta_e = optimal_redundancy(cfg, rho, epsilon, model);
  const auto coeffs = cop_coefficients(cfg, rho, beta_e);
  require(k >= 1 && k <= cfg.K, ErrorCode::domain, "sensor index k must lie in [1, K]");
  const double beta_s = rate_to_threshold(R_s);
  const double beta_t = beta_e + (1.0 + beta_e) * beta_s;
  const double p = cop_low_approx(cfg, rho, k, beta_t).value;
  return {R_s * (1.0 - p), p, beta_e};
}

SubOptAuxiliaries suboptimal_auxiliaries(const NetworkConfig& cfg,
                                         const OutageConstraints& limits) {
  limits.validate();
  const auto dens = derive_densities(cfg, 0.0);
  const auto pl = math::phi_const(cfg.alpha);
  const double half = cfg.alpha / 2.0;
  SubOptAuxiliaries aux;
  aux.alpha = cfg.alpha;
  aux.Y = (dens.lambda_i / dens.lambda_a) * std::pow(cfg.P_j / cfg.P_a, pl.delta);
  aux.Z = (cfg.P_a / cfg.P_j) *
          std::pow(kPi * cfg.lambda_e * cfg.M_e /
                       (pl.phi * dens.lambda_i * log_inv_one_minus(limits.epsilon)),
                   half);
  aux.X.resize(cfg.K);
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= cfg.K; ++k) {
    const double Lambda = math::lambda_coeff(cfg.K, k);
    const double Xi = math::xi_coeff(cfg.M_c - cfg.K + k, pl.delta);
    aux.X[k - 1] = std::pow(limits.sigma * kPi * cfg.lambda_c /
                                (dens.lambda_a * pl.phi * Lambda * Xi),
                            half);
    const double margin = std::pow(aux.X[k - 1] / aux.Z, pl.delta) - aux.Y;
    if (margin < worst_margin) {
      worst_margin = margin;
      aux.blocking_k = k;
    }
  }
  if (worst_margin > 0.0) {
    aux.rho_min = 1.0 / worst_margin;
    aux.feasible = aux.rho_min <= 1.0;
  } else {
    aux.rho_min = std::numeric_limits<double>::infinity();
  }
  return aux;
}

SubOptRates suboptimal_rates(const NetworkConfig& cfg, double rho,
                             const OutageConstraints& limits) {
  require(rho > 0.0 && rho <= 1.0, ErrorCode::domain, "rho must lie in (0, 1]");
  const auto aux = suboptimal_auxiliaries(cfg, limits);
  const double half = cfg.alpha / 2.0;
  SubOptRates r;
  const double shrink = std::pow(1.0 + aux.Y * rho, -half);
  for (double X : aux.X) r.beta_t.push_back(X * shrink);
  r.beta_e = aux.Z * std::pow(rho, -half);
  return r;
}

double kappa(double rho, const SubOptAuxiliaries& aux) {
  const double shrink = std::pow(1.0 + aux.Y * rho, -aux.alpha / 2.0);
  double sum = 0.0;
  for (double X : aux.X) sum += 1.0 / (X * shrink + 1.0);
  return sum / static_cast<double>(aux.X.size());
}

double G_function(double rho, const SubOptAuxiliaries& aux) {
  const double k = kappa(rho, aux);
  return 1.0 + aux.Y * rho * k -
         aux.Y * std::pow(rho, aux.alpha / 2.0 + 1.0) * (1.0 - k) / aux.Z;
}

SubOptRho suboptimal_rho(const NetworkConfig& cfg,
                         const OutageConstraints& limits) {
  const auto aux = suboptimal_auxiliaries(cfg, limits);
  SubOptRho out;
  out.blocking_k = aux.blocking_k;
  if (!aux.feasible) return out;
  const double g_min = G_function(aux.rho_min, aux);
  if (g_min < 0.0) {
    out.rho = aux.rho_min;
    out.sub_case = SubOptCase::lower_bound;
    return out;
  }
  if (G_function(1.0, aux) >= 0.0) {
    out.rho = 1.0;
    out.sub_case = SubOptCase::full_jamming;
    return out;
  }
  double lo = aux.rho_min;
  double hi = 1.0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (G_function(mid, aux) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double g_lo = std::abs(G_function(lo, aux));
  const double g_hi = std::abs(G_function(hi, aux));
  out.rho = g_lo <= g_hi ? lo : hi;
  out.G_residual = std::min(g_lo, g_hi);
  out.sub_case = SubOptCase::interior;
  return out;
}

SubOptThroughput suboptimal_throughput(const NetworkConfig& cfg, double rho,
                                       const OutageConstraints& limits) {
  const auto rates = suboptimal_rates(cfg, rho, limits);
  SubOptThroughput out;
  math::KahanSum total;
  for (double bt : rates.beta_t) {
    const double term = (1.0 - limits.sigma) * std::log2((1.0 + bt) / (1.0 + rates.beta_e));
    out.floored.push_back(term < 0.0);
    out.per_sensor.push_back(std::max(0.0, term));
    total += out.per_sensor.back();
  }
  out.T_sum = total.value();
  return out;
}

DesignResult suboptimal_design(const NetworkConfig& cfg,
                               const OutageConstraints& limits) {
  const auto choice = suboptimal_rho(cfg, limits);
  DesignResult r;
  r.scheme = Scheme::suboptimal;
  r.sub_case = choice.sub_case;
  r.blocking_k = choice.blocking_k;
  r.sensors.resize(cfg.K);
  if (choice.sub_case == SubOptCase::infeasible) return r;
  r.rho = choice.rho;
  r.G_residual = choice.G_residual;
  const auto rates = suboptimal_rates(cfg, r.rho, limits);
  const auto tp = suboptimal_throughput(cfg, r.rho, limits);
  r.sop = sop_interference_limited(cfg, r.rho, rates.beta_e).value;
  r.sop_ok = r.sop <= limits.epsilon + kRecheckSlack;
  r.cop_ok = true;
  for (int k = 1; k <= cfg.K; ++k) {
    auto& s = r.sensors[k - 1];
    s.beta_t = rates.beta_t[k - 1];
    s.beta_e = rates.beta_e;
    s.R_t = rate(s.beta_t);
    s.R_e = rate(s.beta_e);
    s.R_s = std::max(0.0, s.R_t - s.R_e);
    s.beta_s = rate_to_threshold(s.R_s);
    s.throughput = tp.per_sensor[k - 1];
    s.floored = tp.floored[k - 1];
    s.feasible = !s.floored;
    s.cop_low = cop_low_approx(cfg, r.rho, k, s.beta_t).value;
    s.cop_il = cop_interference_limited(cfg, r.rho, k, s.beta_t).value;
    r.cop_ok = r.cop_ok && s.cop_low <= limits.sigma + kRecheckSlack;
  }
  r.T_sum = tp.T_sum;
  r.feasible = true;
  return r;
}

int expected_rho_direction(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::lambda_c:
    case SweepParameter::K:
    case SweepParameter::lambda_e:
    case SweepParameter::M_e:
      return +1;
    default:
      return -1;
  }
}

MonotonicityReport rho_monotonicity_report(const NetworkConfig& cfg,
                                           const OutageConstraints& limits,
                                           SweepParameter parameter,
                                           const std::vector<double>& values) {
  require(values.size() >= 2, ErrorCode::domain, "sweep needs at least two values");
  MonotonicityReport report{parameter, expected_rho_direction(parameter), {}, true, true};
  for (double v : values) {
    NetworkConfig c = cfg;
    OutageConstraints l = limits;
    switch (parameter) {
      case SweepParameter::sigma: l.sigma = v; break;
      case SweepParameter::epsilon: l.epsilon = v; break;
      case SweepParameter::M_c: c.M_c = static_cast<int>(std::lround(v)); break;
      case SweepParameter::lambda_s: c.lambda_s = v; break;
      case SweepParameter::power_ratio: c.P_j = v * c.P_a; break;
      case SweepParameter::lambda_c: c.lambda_c = v; break;
      case SweepParameter::K: c.K = static_cast<int>(std::lround(v)); break;
      case SweepParameter::lambda_e: c.lambda_e = v; break;
      case SweepParameter::M_e: c.M_e = static_cast<int>(std::lround(v)); break;
    }
    const auto choice = suboptimal_rho(c, l);
    report.rows.push_back({v, choice.rho, choice.sub_case});
    if (choice.sub_case != SubOptCase::interior) report.all_interior = false;
  }
  // Rows outside the interior case are excluded from the ordering check.
  const MonotonicityRow* prev = nullptr;
  int compared = 0;
  for (const auto& row : report.rows) {
    if (row.sub_case != SubOptCase::interior) continue;
    if (prev) {
      const double step =
          (row.rho - prev->rho) * (row.value > prev->value ? 1 : -1);
      if (!(step * report.expected_direction > 0.0)) report.confirmed = false;
      ++compared;
    }
    prev = &row;
  }
  if (compared == 0) report.confirmed = false;
  return report;
}

}  // namespace secwsn
