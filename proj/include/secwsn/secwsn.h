/* Copyright 2026 The secwsn Authors
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef SECWSN_SECWSN_H
#define SECWSN_SECWSN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef SECWSN_BUILDING
#    define SECWSN_API __declspec(dllexport)
#  else
#    define SECWSN_API __declspec(dllimport)
#  endif
#else
#  define SECWSN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure secwsn_last_error()
 * holds a message for the calling thread until its next failing call. */
typedef enum secwsn_status {
  SECWSN_OK = 0,
  SECWSN_ERR_DOMAIN = 1,      /* argument outside its domain */
  SECWSN_ERR_CONFIG = 2,      /* invalid network configuration */
  SECWSN_ERR_IO = 3,          /* file could not be read */
  SECWSN_ERR_INFEASIBLE = 4,  /* constraint cannot be met */
  SECWSN_ERR_UNSUPPORTED = 5,
  SECWSN_ERR_DIVERGENT = 6,   /* integral diverges */
  SECWSN_ERR_NULL = 7,        /* required pointer was NULL */
  SECWSN_ERR_INTERNAL = 8
} secwsn_status;

SECWSN_API const char* secwsn_last_error(void);
SECWSN_API const char* secwsn_status_name(secwsn_status status);

/* ---- network ---------------------------------------------------------- */

/* Powers in linear milliwatts, densities per unit area. */
typedef struct secwsn_network_params {
  double lambda_s;
  double lambda_c;
  double lambda_e;
  int K;
  int M_c;
  int M_e;
  double P_a_mw;
  double P_j_mw;
  double omega_mw; /* 0 selects the interference-limited model */
  double alpha;
} secwsn_network_params;

typedef struct secwsn_network secwsn_network;

SECWSN_API void secwsn_network_params_default(secwsn_network_params* params);
SECWSN_API secwsn_status secwsn_network_create(const secwsn_network_params* params,
                                               secwsn_network** out);
/* key=value file; see README for the key set. */
SECWSN_API secwsn_status secwsn_network_load(const char* path, secwsn_network** out);
SECWSN_API void secwsn_network_free(secwsn_network* network);
SECWSN_API secwsn_status secwsn_network_get_params(const secwsn_network* network,
                                                   secwsn_network_params* out);
SECWSN_API size_t secwsn_network_warning_count(const secwsn_network* network);
SECWSN_API const char* secwsn_network_warning(const secwsn_network* network, size_t index);

SECWSN_API double secwsn_dbm_to_linear(double dbm);

/* ---- analytic outage probabilities ------------------------------------ */

typedef enum secwsn_outage_flag {
  SECWSN_FLAG_NONE = 0,
  SECWSN_FLAG_CLAMPED = 1,   /* raw value left [0, 1] by more than 1e-8 */
  SECWSN_FLAG_DEGENERATE = 2 /* no jamming and no noise at eavesdroppers */
} secwsn_outage_flag;

typedef enum secwsn_sop_model {
  SECWSN_SOP_GENERAL = 0,
  SECWSN_SOP_INTERFERENCE_LIMITED = 1
} secwsn_sop_model;

/* k is 1-based; `flag` may be NULL. */
SECWSN_API secwsn_status secwsn_cop_general(const secwsn_network* network, double rho,
                                            int k, double beta_t, double* value,
                                            secwsn_outage_flag* flag);
SECWSN_API secwsn_status secwsn_cop_il(const secwsn_network* network, double rho, int k,
                                       double beta_t, double* value,
                                       secwsn_outage_flag* flag);
SECWSN_API secwsn_status secwsn_cop_low(const secwsn_network* network, double rho, int k,
                                        double beta_t, double* value,
                                        secwsn_outage_flag* flag);
SECWSN_API secwsn_status secwsn_sop_general(const secwsn_network* network, double rho,
                                            double beta_e, double* value,
                                            secwsn_outage_flag* flag);
SECWSN_API secwsn_status secwsn_sop_il(const secwsn_network* network, double rho,
                                       double beta_e, double* value,
                                       secwsn_outage_flag* flag);

/* ---- Monte Carlo ------------------------------------------------------ */

typedef enum secwsn_jammer_mode {
  SECWSN_JAMMER_PER_EAVESDROPPER = 0,
  SECWSN_JAMMER_COMMON_FIELD = 1
} secwsn_jammer_mode;

typedef struct secwsn_sim_options {
  uint64_t trials;
  uint64_t seed;
  double r_max;     /* 0 selects 30 / sqrt(pi lambda_c) */
  unsigned threads; /* 0 selects hardware concurrency */
  secwsn_jammer_mode jammer_mode;
} secwsn_sim_options;

typedef struct secwsn_estimate {
  double p_hat;
  double std_error;
  uint64_t trials;
  uint64_t seed;
  uint64_t outages;
  double r_max;
  int tail_warning; /* far-field interference beyond r_max not negligible */
} secwsn_estimate;

SECWSN_API void secwsn_sim_options_default(secwsn_sim_options* options);
SECWSN_API secwsn_status secwsn_simulate_cop(const secwsn_network* network, double rho,
                                             int k, double beta_t,
                                             const secwsn_sim_options* options,
                                             secwsn_estimate* out);
SECWSN_API secwsn_status secwsn_simulate_sop(const secwsn_network* network, double rho,
                                             double beta_e,
                                             const secwsn_sim_options* options,
                                             secwsn_estimate* out);

/* ---- throughput design ------------------------------------------------ */

typedef enum secwsn_scheme {
  SECWSN_SCHEME_OPTIMAL = 0,
  SECWSN_SCHEME_SUBOPTIMAL = 1
} secwsn_scheme;

typedef enum secwsn_subopt_case {
  SECWSN_CASE_INFEASIBLE = 0,
  SECWSN_CASE_LOWER_BOUND = 1, /* rho* = rho_min */
  SECWSN_CASE_FULL_JAMMING = 2, /* rho* = 1 */
  SECWSN_CASE_INTERIOR = 3      /* G(rho*) = 0 */
} secwsn_subopt_case;

typedef struct secwsn_design secwsn_design;

typedef struct secwsn_design_summary {
  secwsn_scheme scheme;
  int feasible;
  int K;
  double rho;
  double T_sum;
  double sop;     /* re-evaluated at the designed beta_e */
  int cop_ok;
  int sop_ok;
  int blocking_k; /* sub-optimal only; 0 when none */
  secwsn_subopt_case sub_case;
  double G_residual;
} secwsn_design_summary;

typedef struct secwsn_sensor_design {
  double R_t, R_s, R_e;
  double beta_t, beta_s, beta_e;
  double throughput;
  double cop_low; /* re-evaluated constraint values */
  double cop_il;
  int feasible;
  int floored;
} secwsn_sensor_design;

/* An infeasible problem still yields a design (feasible == 0) so the
 * diagnostics can be read; the status is SECWSN_OK. */
SECWSN_API secwsn_status secwsn_optimal_design(const secwsn_network* network, double sigma,
                                               double epsilon, double rho_grid_step,
                                               secwsn_sop_model model,
                                               secwsn_design** out);
SECWSN_API secwsn_status secwsn_suboptimal_design(const secwsn_network* network,
                                                  double sigma, double epsilon,
                                                  secwsn_design** out);
SECWSN_API void secwsn_design_free(secwsn_design* design);
SECWSN_API secwsn_status secwsn_design_get_summary(const secwsn_design* design,
                                                   secwsn_design_summary* out);
SECWSN_API secwsn_status secwsn_design_get_sensor(const secwsn_design* design, int k,
                                                  secwsn_sensor_design* out);

/* Sum throughput of each scheme at a fixed jamming probability. The
 * sub-optimal value floors negative per-sensor terms at zero. */
SECWSN_API secwsn_status secwsn_optimal_throughput_at(const secwsn_network* network,
                                                      double rho, double sigma,
                                                      double epsilon,
                                                      secwsn_sop_model model,
                                                      double* T);
SECWSN_API secwsn_status secwsn_suboptimal_throughput(const secwsn_network* network,
                                                      double rho, double sigma,
                                                      double epsilon, double* T);

/* T_k at secrecy rate R_s with beta_e set from epsilon; `cop` may be NULL. */
SECWSN_API secwsn_status secwsn_sensor_throughput(const secwsn_network* network,
                                                  double rho, double epsilon, int k,
                                                  double R_s, secwsn_sop_model model,
                                                  double* T, double* cop);

#ifdef __cplusplus
}
#endif

#endif /* SECWSN_SECWSN_H */
