// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "rng.hpp"

namespace secwsn::math {

// Alternating sums over order statistics lose roughly log10(C(K, K/2))
// digits; beyond this many scheduled sensors the closed forms are refused.
inline constexpr int kMaxScheduled = 30;

// Neumaier-compensated accumulator.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  KahanSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct PathLossDerived {
  double alpha;
  double delta;  // 2 / alpha
  double phi;    // pi * Gamma(1 + delta) * Gamma(1 - delta)
};

PathLossDerived phi_const(double alpha);

// C(n, k) in floating point; exact for n <= 60.
double binomial(int n, int k);

// Sum over (p - n)-subsets of {1, ..., p - 1}, each sorted ascending as
// q_1 < ... < q_{p-n}, of prod_i [q_i - delta * (q_i - i + 1)].
// upsilon(p, p, delta) == 1.
double upsilon(int p, int n, double delta);

// Parameters of Omega_mu = int_0^inf x^mu exp(-tau1 x^(alpha/2) - tau2 x) dx.
struct OmegaParams {
  double mu = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double alpha = 4.0;
};

/// Omega_mu by adaptive Gauss-Kronrod quadrature on a rescaled, compactified
/// half line. Relative accuracy is ~1e-10 over the parameter ranges the
/// outage formulas produce.
double omega_integral(const OmegaParams& params);

/// Natural log of omega_integral; stays finite where Omega itself overflows.
double log_omega_integral(const OmegaParams& params);

// Gamma(mu + 1) / tau2^(mu + 1), the tau1 = 0 case of Omega_mu.
double omega_gamma(double mu, double tau2);

// e^(z^2/4) D_{-nu}(z) for nu > 0, from
// D_{-nu}(z) = e^(-z^2/4) / Gamma(nu) * int_0^inf t^(nu-1) e^(-z t - t^2/2) dt.
double parabolic_cylinder_d_scaled(double nu, double z);
double parabolic_cylinder_d(double nu, double z);

/// Omega_mu for alpha = 4 through the parabolic cylinder function:
/// (2 tau1)^(-(mu+1)/2) Gamma(mu+1) e^(tau2^2/(8 tau1)) D_{-mu-1}(tau2/sqrt(2 tau1)).
/// Falls back to omega_gamma when tau1 == 0.
double omega_closed_form_alpha4(const OmegaParams& params);

// Lambda_k = k C(K,k) sum_l C(k-1,l) (-1)^l / (K-k+l+1)^2.
double lambda_coeff(int K, int k);

// Xi_M = 1 + sum_{m=1}^{M-1} (1/m!) prod_{i=0}^{m-1} (i - delta).
double xi_coeff(int M, double delta);

// PDF of the distance from the typical FC to its k-th nearest of K
// scheduled sensors.
double ordered_distance_pdf(double r, int k, int K, double lambda_c);

// K i.i.d. draws from f_L(r) = 2 pi lambda_c r exp(-pi lambda_c r^2),
// sorted ascending into `out` (size K).
void sample_ordered_distances(double lambda_c, Philox4x32& rng,
                              std::span<double> out);
std::vector<double> sample_ordered_distances(int K, double lambda_c,
                                             Philox4x32& rng);

}  // namespace secwsn::math
