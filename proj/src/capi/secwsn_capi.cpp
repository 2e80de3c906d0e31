// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#include "secwsn/secwsn.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "analytics.hpp"
#include "error.hpp"
#include "network_model.hpp"
#include "optimizer.hpp"
#include "simulator.hpp"

struct secwsn_network {
  secwsn::NetworkConfig cfg;
  std::vector<std::string> warnings;
};

struct secwsn_design {
  secwsn::DesignResult result;
};

namespace {

thread_local std::string g_last_error;

secwsn_status set_error(secwsn_status status, const char* what) {
  g_last_error = what;
  return status;
}

secwsn_status to_status(secwsn::ErrorCode code) {
  switch (code) {
    case secwsn::ErrorCode::domain: return SECWSN_ERR_DOMAIN;
    case secwsn::ErrorCode::config: return SECWSN_ERR_CONFIG;
    case secwsn::ErrorCode::io: return SECWSN_ERR_IO;
    case secwsn::ErrorCode::infeasible: return SECWSN_ERR_INFEASIBLE;
    case secwsn::ErrorCode::unsupported: return SECWSN_ERR_UNSUPPORTED;
    case secwsn::ErrorCode::divergent: return SECWSN_ERR_DIVERGENT;
  }
  return SECWSN_ERR_INTERNAL;
}

template <class F>
secwsn_status guarded(F&& body) {
  try {
    body();
    return SECWSN_OK;
  } catch (const secwsn::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SECWSN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SECWSN_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SECWSN_ERR_INTERNAL, "unknown error");
  }
}

#define SECWSN_REQUIRE_PTR(p)                                         \
  do {                                                                \
    if (!(p)) return set_error(SECWSN_ERR_NULL, #p " must not be NULL"); \
  } while (0)

secwsn::SopModel to_model(secwsn_sop_model m) {
  return m == SECWSN_SOP_GENERAL ? secwsn::SopModel::general
                                 : secwsn::SopModel::interference_limited;
}

secwsn::SimulationOptions to_options(const secwsn_sim_options* o) {
  secwsn::SimulationOptions opts;
  if (!o) return opts;
  opts.trials = o->trials;
  opts.seed = o->seed;
  opts.r_max = o->r_max;
  opts.threads = o->threads;
  opts.jammer_mode = o->jammer_mode == SECWSN_JAMMER_COMMON_FIELD
                         ? secwsn::JammerMode::common_field
                         : secwsn::JammerMode::per_eavesdropper;
  return opts;
}

void write_outage(const secwsn::Outage& o, double* value, secwsn_outage_flag* flag) {
  *value = o.value;
  if (flag) *flag = static_cast<secwsn_outage_flag>(o.flag);
}

void write_estimate(const secwsn::OutageEstimate& e, secwsn_estimate* out) {
  out->p_hat = e.p_hat;
  out->std_error = e.std_error;
  out->trials = e.trials;
  out->seed = e.seed;
  out->outages = e.outages;
  out->r_max = e.r_max;
  out->tail_warning = e.tail_warning ? 1 : 0;
}

secwsn_network* make_network(const secwsn::NetworkConfig& cfg) {
  auto warnings = cfg.validate();
  return new secwsn_network{cfg, std::move(warnings)};
}

}  // namespace

extern "C" {

const char* secwsn_last_error(void) { return g_last_error.c_str(); }

const char* secwsn_status_name(secwsn_status status) {
  switch (status) {
    case SECWSN_OK: return "ok";
    case SECWSN_ERR_DOMAIN: return "domain error";
    case SECWSN_ERR_CONFIG: return "configuration error";
    case SECWSN_ERR_IO: return "I/O error";
    case SECWSN_ERR_INFEASIBLE: return "infeasible";
    case SECWSN_ERR_UNSUPPORTED: return "unsupported";
    case SECWSN_ERR_DIVERGENT: return "divergent";
    case SECWSN_ERR_NULL: return "null argument";
    case SECWSN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void secwsn_network_params_default(secwsn_network_params* p) {
  if (!p) return;
  const secwsn::NetworkConfig d;
  *p = {d.lambda_s, d.lambda_c, d.lambda_e, d.K, d.M_c, d.M_e,
        d.P_a,      d.P_j,      d.omega,    d.alpha};
}

secwsn_status secwsn_network_create(const secwsn_network_params* p,
                                    secwsn_network** out) {
  SECWSN_REQUIRE_PTR(p);
  SECWSN_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    secwsn::NetworkConfig cfg;
    cfg.lambda_s = p->lambda_s;
    cfg.lambda_c = p->lambda_c;
    cfg.lambda_e = p->lambda_e;
    cfg.K = p->K;
    cfg.M_c = p->M_c;
    cfg.M_e = p->M_e;
    cfg.P_a = p->P_a_mw;
    cfg.P_j = p->P_j_mw;
    cfg.omega = p->omega_mw;
    cfg.alpha = p->alpha;
    *out = make_network(cfg);
  });
}

secwsn_status secwsn_network_load(const char* path, secwsn_network** out) {
  SECWSN_REQUIRE_PTR(path);
  SECWSN_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] { *out = make_network(secwsn::load_config(path)); });
}

void secwsn_network_free(secwsn_network* network) { delete network; }

secwsn_status secwsn_network_get_params(const secwsn_network* n,
                                        secwsn_network_params* out) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(out);
  const auto& c = n->cfg;
  *out = {c.lambda_s, c.lambda_c, c.lambda_e, c.K, c.M_c, c.M_e,
          c.P_a,      c.P_j,      c.omega,    c.alpha};
  return SECWSN_OK;
}

size_t secwsn_network_warning_count(const secwsn_network* n) {
  return n ? n->warnings.size() : 0;
}

const char* secwsn_network_warning(const secwsn_network* n, size_t index) {
  if (!n || index >= n->warnings.size()) return nullptr;
  return n->warnings[index].c_str();
}

double secwsn_dbm_to_linear(double dbm) { return secwsn::dbm_to_linear(dbm); }

secwsn_status secwsn_cop_general(const secwsn_network* n, double rho, int k,
                                 double beta_t, double* value,
                                 secwsn_outage_flag* flag) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(value);
  return guarded([&] { write_outage(secwsn::cop_general(n->cfg, rho, k, beta_t), value, flag); });
}

secwsn_status secwsn_cop_il(const secwsn_network* n, double rho, int k, double beta_t,
                            double* value, secwsn_outage_flag* flag) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(value);
  return guarded([&] {
    write_outage(secwsn::cop_interference_limited(n->cfg, rho, k, beta_t), value, flag);
  });
}

secwsn_status secwsn_cop_low(const secwsn_network* n, double rho, int k, double beta_t,
                             double* value, secwsn_outage_flag* flag) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(value);
  return guarded([&] { write_outage(secwsn::cop_low_approx(n->cfg, rho, k, beta_t), value, flag); });
}

secwsn_status secwsn_sop_general(const secwsn_network* n, double rho, double beta_e,
                                 double* value, secwsn_outage_flag* flag) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(value);
  return guarded([&] { write_outage(secwsn::sop_general(n->cfg, rho, beta_e), value, flag); });
}

secwsn_status secwsn_sop_il(const secwsn_network* n, double rho, double beta_e,
                            double* value, secwsn_outage_flag* flag) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(value);
  return guarded([&] {
    write_outage(secwsn::sop_interference_limited(n->cfg, rho, beta_e), value, flag);
  });
}

void secwsn_sim_options_default(secwsn_sim_options* o) {
  if (!o) return;
  const secwsn::SimulationOptions d;
  *o = {d.trials, d.seed, d.r_max, d.threads, SECWSN_JAMMER_PER_EAVESDROPPER};
}

secwsn_status secwsn_simulate_cop(const secwsn_network* n, double rho, int k,
                                  double beta_t, const secwsn_sim_options* options,
                                  secwsn_estimate* out) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(out);
  return guarded([&] {
    write_estimate(secwsn::simulate_cop(n->cfg, rho, k, beta_t, to_options(options)), out);
  });
}

secwsn_status secwsn_simulate_sop(const secwsn_network* n, double rho, double beta_e,
                                  const secwsn_sim_options* options,
                                  secwsn_estimate* out) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(out);
  return guarded([&] {
    write_estimate(secwsn::simulate_sop(n->cfg, rho, beta_e, to_options(options)), out);
  });
}

secwsn_status secwsn_optimal_design(const secwsn_network* n, double sigma,
                                    double epsilon, double rho_grid_step,
                                    secwsn_sop_model model, secwsn_design** out) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    *out = new secwsn_design{
        secwsn::optimal_design(n->cfg, {sigma, epsilon}, rho_grid_step, to_model(model))};
  });
}

secwsn_status secwsn_suboptimal_design(const secwsn_network* n, double sigma,
                                       double epsilon, secwsn_design** out) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    *out = new secwsn_design{secwsn::suboptimal_design(n->cfg, {sigma, epsilon})};
  });
}

void secwsn_design_free(secwsn_design* design) { delete design; }

secwsn_status secwsn_design_get_summary(const secwsn_design* d,
                                        secwsn_design_summary* out) {
  SECWSN_REQUIRE_PTR(d);
  SECWSN_REQUIRE_PTR(out);
  const auto& r = d->result;
  out->scheme = r.scheme == secwsn::Scheme::optimal ? SECWSN_SCHEME_OPTIMAL
                                                    : SECWSN_SCHEME_SUBOPTIMAL;
  out->feasible = r.feasible ? 1 : 0;
  out->K = static_cast<int>(r.sensors.size());
  out->rho = r.rho;
  out->T_sum = r.T_sum;
  out->sop = r.sop;
  out->cop_ok = r.cop_ok ? 1 : 0;
  out->sop_ok = r.sop_ok ? 1 : 0;
  out->blocking_k = r.blocking_k;
  out->sub_case = static_cast<secwsn_subopt_case>(r.sub_case);
  out->G_residual = r.G_residual;
  return SECWSN_OK;
}

secwsn_status secwsn_design_get_sensor(const secwsn_design* d, int k,
                                       secwsn_sensor_design* out) {
  SECWSN_REQUIRE_PTR(d);
  SECWSN_REQUIRE_PTR(out);
  if (k < 1 || k > static_cast<int>(d->result.sensors.size()))
    return set_error(SECWSN_ERR_DOMAIN, "sensor index k must lie in [1, K]");
  const auto& s = d->result.sensors[k - 1];
  *out = {s.R_t,        s.R_s,     s.R_e,    s.beta_t,
          s.beta_s,     s.beta_e,  s.throughput, s.cop_low,
          s.cop_il,     s.feasible ? 1 : 0,  s.floored ? 1 : 0};
  return SECWSN_OK;
}

secwsn_status secwsn_optimal_throughput_at(const secwsn_network* n, double rho,
                                           double sigma, double epsilon,
                                           secwsn_sop_model model, double* T) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(T);
  return guarded([&] {
    *T = secwsn::optimal_throughput_at(n->cfg, rho, {sigma, epsilon}, to_model(model));
  });
}

secwsn_status secwsn_suboptimal_throughput(const secwsn_network* n, double rho,
                                           double sigma, double epsilon, double* T) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(T);
  return guarded([&] {
    *T = secwsn::suboptimal_throughput(n->cfg, rho, {sigma, epsilon}).T_sum;
  });
}

secwsn_status secwsn_sensor_throughput(const secwsn_network* n, double rho,
                                       double epsilon, int k, double R_s,
                                       secwsn_sop_model model, double* T, double* cop) {
  SECWSN_REQUIRE_PTR(n);
  SECWSN_REQUIRE_PTR(T);
  return guarded([&] {
    const auto p = secwsn::sensor_throughput(n->cfg, rho, epsilon, k, R_s, to_model(model));
    *T = p.throughput;
    if (cop) *cop = p.cop_low;
  });
}

}  // extern "C"
