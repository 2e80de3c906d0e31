// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "network_model.hpp"
#include "rng.hpp"

namespace secwsn {

enum class JammerMode {
  per_eavesdropper,  // independent jammer field per eavesdropper
  common_field,      // one jammer realization shared by all eavesdroppers
};

struct SimulationOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  double r_max = 0.0;    // 0 selects 30 / sqrt(pi lambda_c)
  unsigned threads = 0;  // 0 selects hardware concurrency
  JammerMode jammer_mode = JammerMode::per_eavesdropper;
};

struct OutageEstimate {
  double p_hat = 0.0;
  double std_error = 0.0;  // sqrt(p (1 - p) / N)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t outages = 0;
  double r_max = 0.0;
  // Mean interference beyond r_max exceeds 1e-3 of the reference level.
  bool tail_warning = false;
};

double default_r_max(const NetworkConfig& cfg);

// One realization of the ZF-SIC receiver for stream k: the signal gain
// ||projection of h_k off span{h_{k+1}, ..., h_K}||^2 and the gain
// |w_k^H h_x|^2 seen by an independent out-of-cell channel h_x.
struct ZfSicDraw {
  double signal_gain;
  double interferer_gain;
};
ZfSicDraw draw_zf_sic(int M_c, int K, int k, Philox4x32& rng);

OutageEstimate simulate_cop(const NetworkConfig& cfg, double rho, int k,
                            double beta_t, const SimulationOptions& options);

OutageEstimate simulate_sop(const NetworkConfig& cfg, double rho, double beta_e,
                            const SimulationOptions& options);

enum class ProbeQuantity { cop, sop };

struct ProbeRow {
  double r_max;
  OutageEstimate estimate;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  // First radius whose estimate differs from the previous one by less than
  // one standard error; NaN when none does.
  double converged_r_max;
};

// `threshold` is beta_t for cop (with sensor k) and beta_e for sop.
ProbeReport convergence_probe(const NetworkConfig& cfg, double rho,
                              ProbeQuantity quantity, int k, double threshold,
                              const std::vector<double>& radii,
                              const SimulationOptions& options);

}  // namespace secwsn
