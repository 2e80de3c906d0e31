// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "analytics.hpp"
#include "network_model.hpp"

namespace secwsn {

enum class Scheme { optimal, suboptimal };

// Smallest beta_e meeting sop(beta_e) <= epsilon. The interference-limited
// model inverts the closed form; the general model bisects on log(beta_e).
double optimal_redundancy(const NetworkConfig& cfg, double rho, double epsilon,
                          SopModel model = SopModel::interference_limited);

// Per-sensor throughput model T(b) = (1 - A (b + B)^delta) log2(1 + b) and
// its derivative in b.
double sensor_throughput_model(double A, double B, double alpha, double beta_s);
double sensor_throughput_slope(double A, double B, double alpha, double beta_s);

struct SecrecyThreshold {
  double beta_s = 0.0;
  double throughput = 0.0;
  double beta_s_max = 0.0;  // A^(-alpha/2) - B, where T reaches zero again
  double beta_s_cap = 0.0;  // sigma cap, A (b + B)^delta = sigma
  bool feasible = false;
  bool cap_active = false;  // slope still positive at the sigma cap
};

// Maximizer of T(b) on (0, min(beta_s_max, beta_s_cap)].
SecrecyThreshold optimal_secrecy_threshold(double A, double B, double alpha,
                                           double sigma);
// Uses the effective coefficient A_k (1 + beta_e)^delta of sensor k.
SecrecyThreshold optimal_secrecy_threshold(const CopCoefficients& coeffs, int k,
                                           double sigma);

enum class SubOptCase {
  infeasible = 0,
  lower_bound = 1,   // rho* = rho_min
  full_jamming = 2,  // rho* = 1
  interior = 3,      // G(rho*) = 0
};

struct SensorDesign {
  double R_t = 0.0, R_s = 0.0, R_e = 0.0;
  double beta_t = 0.0, beta_s = 0.0, beta_e = 0.0;
  double throughput = 0.0;
  bool feasible = false;
  bool floored = false;  // negative sub-optimal term clamped to zero
  double cop_low = 0.0;  // re-evaluated constraint values
  double cop_il = 0.0;
};

struct DesignResult {
  Scheme scheme = Scheme::optimal;
  bool feasible = false;
  double rho = 0.0;
  double T_sum = 0.0;
  std::vector<SensorDesign> sensors;
  double sop = 1.0;      // re-evaluated at the sensors' beta_e
  bool cop_ok = false;   // every feasible sensor has cop_low <= sigma
  bool sop_ok = false;
  int blocking_k = 0;    // sub-optimal: sensor that forces infeasibility
  SubOptCase sub_case = SubOptCase::infeasible;
  double G_residual = 0.0;  // |G(rho*)| in the interior case
};

// Optimal scheme at a fixed jamming probability.
DesignResult optimal_design_at(const NetworkConfig& cfg, double rho,
                               const OutageConstraints& limits,
                               SopModel model = SopModel::interference_limited);
double optimal_throughput_at(const NetworkConfig& cfg, double rho,
                             const OutageConstraints& limits,
                             SopModel model = SopModel::interference_limited);
// Grid search over rho in [0, 1] plus golden-section refinement to 1e-4.
DesignResult optimal_design(const NetworkConfig& cfg,
                            const OutageConstraints& limits,
                            double rho_grid_step = 0.01,
                            SopModel model = SopModel::interference_limited);

// T_k at a given secrecy rate, with beta_e chosen optimally for epsilon.
struct SensorThroughputPoint {
  double throughput;
  double cop_low;
  double beta_e;
};
SensorThroughputPoint sensor_throughput(const NetworkConfig& cfg, double rho,
                                        double epsilon, int k, double R_s,
                                        SopModel model = SopModel::interference_limited);

struct SubOptAuxiliaries {
  std::vector<double> X;
  double Y = 0.0;
  double Z = 0.0;
  double alpha = 4.0;
  double rho_min = 0.0;
  bool feasible = false;
  int blocking_k = 0;
};

SubOptAuxiliaries suboptimal_auxiliaries(const NetworkConfig& cfg,
                                         const OutageConstraints& limits);

struct SubOptRates {
  std::vector<double> beta_t;
  double beta_e;
};
SubOptRates suboptimal_rates(const NetworkConfig& cfg, double rho,
                             const OutageConstraints& limits);

double kappa(double rho, const SubOptAuxiliaries& aux);
double G_function(double rho, const SubOptAuxiliaries& aux);

struct SubOptRho {
  double rho = 0.0;
  SubOptCase sub_case = SubOptCase::infeasible;
  int blocking_k = 0;
  double G_residual = 0.0;
};
SubOptRho suboptimal_rho(const NetworkConfig& cfg,
                         const OutageConstraints& limits);

struct SubOptThroughput {
  double T_sum = 0.0;
  std::vector<double> per_sensor;
  std::vector<bool> floored;
};
SubOptThroughput suboptimal_throughput(const NetworkConfig& cfg, double rho,
                                       const OutageConstraints& limits);

DesignResult suboptimal_design(const NetworkConfig& cfg,
                               const OutageConstraints& limits);

enum class SweepParameter {
  sigma,
  epsilon,
  M_c,
  lambda_s,
  power_ratio,  // P_j / P_a, applied by scaling P_j
  lambda_c,
  K,
  lambda_e,
  M_e,
};

struct MonotonicityRow {
  double value;
  double rho;
  SubOptCase sub_case;
};

struct MonotonicityReport {
  SweepParameter parameter;
  int expected_direction;  // +1 increasing, -1 decreasing
  std::vector<MonotonicityRow> rows;
  bool all_interior;
  bool confirmed;  // strict monotonicity over the interior rows
};

int expected_rho_direction(SweepParameter parameter);
MonotonicityReport rho_monotonicity_report(const NetworkConfig& cfg,
                                           const OutageConstraints& limits,
                                           SweepParameter parameter,
                                           const std::vector<double>& values);

}  // namespace secwsn
