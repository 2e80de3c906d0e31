// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-side reference computations. Nothing here calls into the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

// Enumerates every (p - n)-subset of {1..p-1} as a bitmask.
inline double upsilon_brute(int p, int n, double delta) {
  const int size = p - n;
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << (p - 1)); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    double prod = 1.0;
    int i = 1;
    for (int q = 1; q <= p - 1; ++q) {
      if (!(mask & (1u << (q - 1)))) continue;
      prod *= q - delta * (q - i + 1);
      ++i;
    }
    total += prod;
  }
  return total;
}

// Lambda_k = H_K - H_{K-k}, from integrating the order-statistic density.
inline double lambda_harmonic(int K, int k) {
  double s = 0.0;
  for (int j = K - k + 1; j <= K; ++j) s += 1.0 / j;
  return s;
}

// Xi_M = Gamma(M - delta) / (Gamma(1 - delta) Gamma(M)).
inline double xi_gamma_ratio(int M, double delta) {
  return std::exp(std::lgamma(M - delta) - std::lgamma(1.0 - delta) - std::lgamma(M));
}

// CDF of the k-th smallest of K i.i.d. Rayleigh distances, through the
// binomial tail of the count below r.
inline double ordered_distance_cdf(double r, int k, int K, double lambda_c) {
  const double F = -std::expm1(-std::numbers::pi * lambda_c * r * r);
  double s = 0.0;
  for (int j = k; j <= K; ++j) s += binom(K, j) * std::pow(F, j) * std::pow(1.0 - F, K - j);
  return s;
}

// Gamma(M, 1) CDF for integer M.
inline double gamma_cdf_int(int M, double x) {
  double term = 1.0, sum = 1.0;
  for (int i = 1; i < M; ++i) {
    term *= x / i;
    sum += term;
  }
  return 1.0 - std::exp(-x) * sum;
}

inline double exp_cdf(double x) { return -std::expm1(-x); }

// Two-sided Kolmogorov-Smirnov distance against a continuous CDF.
inline double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - F, F - i / n});
  }
  return d;
}

// Adaptive Simpson on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-12, int depth = 48) {
  std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole,
          double eps, int d) {
        const double mid = 0.5 * (lo + hi);
        const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
        const double flm = f(lm), frm = f(rm);
        const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
        if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
          return left + right + (left + right - whole) / 15.0;
        return rec(lo, mid, flo, flm, fmid, left, eps / 2.0, d - 1) +
               rec(mid, hi, fmid, frm, fhi, right, eps / 2.0, d - 1);
      };
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return rec(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

// Simpson over equal pieces, so narrow peaks on a long range are not missed.
inline double simpson_pieces(const std::function<double(double)>& f, double a, double b,
                             int pieces = 256, double tol = 1e-11) {
  double total = 0.0;
  for (int i = 0; i < pieces; ++i)
    total += simpson(f, a + (b - a) * i / pieces, a + (b - a) * (i + 1) / pieces, tol / pieces, 30);
  return total;
}

// Omega_mu by piecewise adaptive Simpson on a truncated range; slow but simple.
inline double omega_simpson(double mu, double tau1, double tau2, double alpha) {
  auto g = [&](double x) {
    return x <= 0.0 && mu > 0.0 ? 0.0
                                : std::pow(x, mu) * std::exp(-tau1 * std::pow(x, alpha / 2.0) - tau2 * x);
  };
  // Truncate where the integrand has fallen 1e-18 below its peak.
  double peak = 0.0, hi = 1e-3;
  for (double x = 1e-3; x < 1e8; x *= 1.1) peak = std::max(peak, g(x));
  while (!(g(hi) < 1e-18 * peak && hi > 1.0)) hi *= 1.1;
  double total = 0.0;
  const int pieces = 64;
  for (int i = 0; i < pieces; ++i) {
    const double a = hi * i / pieces, b = hi * (i + 1) / pieces;
    total += simpson(g, a, b, 1e-13 * peak * (b - a), 40);
  }
  return total;
}

}  // namespace oracle
