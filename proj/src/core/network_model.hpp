// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace secwsn {

// Deployment and radio parameters. Powers are linear milliwatts, densities
// are per unit area in model units.
struct NetworkConfig {
  double lambda_s = 1.0;   // sensors
  double lambda_c = 0.01;  // fusion centers
  double lambda_e = 1e-4;  // eavesdroppers
  int K = 3;               // scheduled sensors per FC
  int M_c = 8;             // FC antennas
  int M_e = 2;             // eavesdropper antennas
  double P_a = 10.0;       // information power
  double P_j = 10.0;       // jamming power
  double omega = 1.0;      // receiver noise, 0 for interference-limited
  double alpha = 4.0;      // path-loss exponent

  // Throws Error(config) on a hard violation; returns advisory warnings.
  std::vector<std::string> validate() const;
};

struct DerivedDensities {
  double lambda_a;  // scheduled sensors, K * lambda_c
  double lambda_i;  // idle sensors, lambda_s - K * lambda_c
  double rho;       // jamming probability
  double lambda_j;  // jammers, rho * lambda_i
  double lambda_o;  // lambda_a + (P_j / P_a)^delta * lambda_j
};

DerivedDensities derive_densities(const NetworkConfig& cfg, double rho);

double dbm_to_linear(double dbm);
double linear_to_dbm(double milliwatts);

// beta = 2^R - 1 and its inverse.
double rate_to_threshold(double rate);
double threshold_to_rate(double beta);

// Wiretap code rates for one sensor; R_t = R_s + R_e.
class WiretapCode {
 public:
  static WiretapCode from_rates(double secrecy_rate, double redundancy_rate);
  // beta_t = beta_e + (1 + beta_e) * beta_s.
  static WiretapCode from_thresholds(double beta_s, double beta_e);

  double codeword_rate() const { return secrecy_ + redundancy_; }
  double secrecy_rate() const { return secrecy_; }
  double redundancy_rate() const { return redundancy_; }
  double beta_t() const { return beta_e() + (1.0 + beta_e()) * beta_s(); }
  double beta_s() const { return rate_to_threshold(secrecy_); }
  double beta_e() const { return rate_to_threshold(redundancy_); }

 private:
  WiretapCode(double secrecy, double redundancy)
      : secrecy_(secrecy), redundancy_(redundancy) {}
  double secrecy_;
  double redundancy_;
};

struct OutageConstraints {
  double sigma;    // max COP
  double epsilon;  // max SOP
  void validate() const;
};

// key=value text, '#' comments. Keys: lambda_s, lambda_c, lambda_e, K, M_c,
// M_e, P_a_dbm, P_j_dbm, alpha, and either omega_dbm or the literal omega=0.
NetworkConfig parse_config(std::string_view text);
NetworkConfig load_config(const std::filesystem::path& path);

}  // namespace secwsn
