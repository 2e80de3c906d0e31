// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "network_model.hpp"

namespace secwsn {

enum class OutageFlag {
  none = 0,
  clamped = 1,     // raw value left [0, 1] by more than 1e-8
  degenerate = 2,  // no interference and no noise at the eavesdroppers
};

struct Outage {
  double value = 0.0;
  OutageFlag flag = OutageFlag::none;
};

enum class SopModel { general, interference_limited };

// Connection outage of the k-th nearest scheduled sensor (1-based k).
Outage cop_general(const NetworkConfig& cfg, double rho, int k, double beta_t);
// omega = 0 closed form; cfg.omega is ignored.
Outage cop_interference_limited(const NetworkConfig& cfg, double rho, int k,
                                double beta_t);
// First-order low-outage approximation, linear in beta_t^delta.
Outage cop_low_approx(const NetworkConfig& cfg, double rho, int k,
                      double beta_t);

// Secrecy outage; depends on the sensor only through beta_e.
Outage sop_general(const NetworkConfig& cfg, double rho, double beta_e);
Outage sop_interference_limited(const NetworkConfig& cfg, double rho,
                                double beta_e);
Outage sop(const NetworkConfig& cfg, double rho, double beta_e, SopModel model);

struct SensorCoefficients {
  int M;          // M_c - K + k
  double Lambda;  // geometry coefficient
  double Xi;      // antenna coefficient
  double A;       // phi lambda_o / (pi lambda_c) * Lambda * Xi
};

// Low-COP model coefficients at a fixed jamming probability and redundancy
// threshold. cop_low_approx(beta_t) == sensors[k-1].A * beta_t^delta.
struct CopCoefficients {
  double alpha;
  double delta;
  double beta_e;  // redundancy threshold the B coefficient was built from
  double B;       // beta_e / (1 + beta_e)
  std::vector<SensorCoefficients> sensors;
};

CopCoefficients cop_coefficients(const NetworkConfig& cfg, double rho,
                                 double beta_e);

}  // namespace secwsn
