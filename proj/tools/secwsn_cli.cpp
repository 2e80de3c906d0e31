// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
//
// Experiment driver over the secwsn C API. Every command writes one CSV
// table (header row, LF line endings) to --out or stdout.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secwsn/secwsn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct CliError : std::runtime_error {
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code(exit_code) {}
  int exit_code;
};

void check(secwsn_status status, const char* context) {
  if (status == SECWSN_OK) return;
  const int code = status == SECWSN_ERR_INFEASIBLE ? kExitInfeasible : kExitError;
  throw CliError(code, std::string(context) + ": " + secwsn_status_name(status) +
                           ": " + secwsn_last_error());
}

struct NetworkDeleter {
  void operator()(secwsn_network* n) const { secwsn_network_free(n); }
};
struct DesignDeleter {
  void operator()(secwsn_design* d) const { secwsn_design_free(d); }
};
using Network = std::unique_ptr<secwsn_network, NetworkDeleter>;
using Design = std::unique_ptr<secwsn_design, DesignDeleter>;

Network make_network(const secwsn_network_params& p) {
  secwsn_network* raw = nullptr;
  check(secwsn_network_create(&p, &raw), "network");
  return Network(raw);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// "a,b,c" with each item either a number or an inclusive range start:step:stop.
std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream items(text);
  std::string item;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v))
      throw CliError(kExitError, "bad number '" + s + "' in list '" + text + "'");
    return v;
  };
  while (std::getline(items, item, ',')) {
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw CliError(kExitError, "range '" + item + "' must be start:step:stop");
    const double a = number(item.substr(0, c1));
    const double s = number(item.substr(c1 + 1, c2 - c1 - 1));
    const double b = number(item.substr(c2 + 1));
    if (!(s > 0.0) || b < a)
      throw CliError(kExitError, "range '" + item + "' needs step > 0 and stop >= start");
    const long n = std::lround(std::floor((b - a) / s + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(a + static_cast<double>(i) * s);
  }
  if (out.empty()) throw CliError(kExitError, "empty list '" + text + "'");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_list(text)) {
    if (v != std::floor(v)) throw CliError(kExitError, "expected integers in '" + text + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

class Csv {
 public:
  explicit Csv(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw CliError(kExitError, "cannot open output file '" + path + "'");
    }
  }
  void row(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ',';
      line += cells[i];
    }
    line += '\n';
    buffer_ += line;
  }
  void flush() {
    std::ostream& os = file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
    os << buffer_;
    os.flush();
    if (!os) throw CliError(kExitError, "failed writing output");
  }

 private:
  std::ofstream file_;
  std::string buffer_;
};

struct Options {
  std::string config;
  std::string out;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double r_max = 0.0;
  double rho = 0.05;
  double sigma = 0.1;
  double epsilon = 0.1;
  std::string model = "il";
  std::string jammer_mode = "per-eve";
  bool simulate = false;
  int k = 1;
  std::string beta_db;
  std::string rates = "0.05:0.05:4";
  std::string scheme = "both";
  std::string quantity = "cop";
  double threshold_db = 0.0;
  std::string param;
  std::string values;
  double rho_step = 0.01;
  int figure = 0;
  std::string Mc_list;
  std::string K_list;
  std::string Me_list;
  std::string lambda_e_list;
  std::string lambda_c_list;
  std::string sigma_list;
  std::string epsilon_list;
  std::string rho_list;
};

secwsn_network_params base_params(const Options& o) {
  secwsn_network_params p;
  if (o.config.empty()) {
    secwsn_network_params_default(&p);
    return p;
  }
  secwsn_network* raw = nullptr;
  check(secwsn_network_load(o.config.c_str(), &raw), "config");
  Network n(raw);
  for (std::size_t i = 0; i < secwsn_network_warning_count(n.get()); ++i)
    std::cerr << "warning: " << secwsn_network_warning(n.get(), i) << '\n';
  check(secwsn_network_get_params(n.get(), &p), "config");
  return p;
}

secwsn_sop_model sop_model(const Options& o) {
  return o.model == "general" ? SECWSN_SOP_GENERAL : SECWSN_SOP_INTERFERENCE_LIMITED;
}

secwsn_sim_options sim_options(const Options& o) {
  secwsn_sim_options s;
  secwsn_sim_options_default(&s);
  s.trials = o.trials;
  s.seed = o.seed;
  s.threads = o.threads;
  s.r_max = o.r_max;
  s.jammer_mode =
      o.jammer_mode == "common" ? SECWSN_JAMMER_COMMON_FIELD : SECWSN_JAMMER_PER_EAVESDROPPER;
  return s;
}

// ---- analytic + simulated outage rows ------------------------------------

std::vector<std::string> cop_cells(const secwsn_network* n, const Options& o, double rho,
                                   int k, double beta_db, bool simulate) {
  const double beta = db_to_linear(beta_db);
  double general = 0.0, il = 0.0, low = 0.0;
  check(secwsn_cop_general(n, rho, k, beta, &general, nullptr), "cop_general");
  check(secwsn_cop_il(n, rho, k, beta, &il, nullptr), "cop_il");
  check(secwsn_cop_low(n, rho, k, beta, &low, nullptr), "cop_low");
  std::vector<std::string> cells{fmt(general), fmt(il), fmt(low)};
  if (simulate) {
    const auto opts = sim_options(o);
    secwsn_estimate e;
    check(secwsn_simulate_cop(n, rho, k, beta, &opts, &e), "simulate_cop");
    cells.push_back(fmt(e.p_hat));
    cells.push_back(fmt(e.std_error));
    if (e.tail_warning) std::cerr << "warning: COP tail beyond r_max not negligible\n";
  }
  return cells;
}

std::vector<std::string> sop_cells(const secwsn_network* n, const Options& o, double rho,
                                   double beta_db, bool simulate) {
  const double beta = db_to_linear(beta_db);
  double general = 0.0, il = 0.0;
  check(secwsn_sop_general(n, rho, beta, &general, nullptr), "sop_general");
  check(secwsn_sop_il(n, rho, beta, &il, nullptr), "sop_il");
  std::vector<std::string> cells{fmt(general), fmt(il)};
  if (simulate) {
    const auto opts = sim_options(o);
    secwsn_estimate e;
    check(secwsn_simulate_sop(n, rho, beta, &opts, &e), "simulate_sop");
    cells.push_back(fmt(e.p_hat));
    cells.push_back(fmt(e.std_error));
    if (e.tail_warning) std::cerr << "warning: SOP jammer tail beyond r_max not negligible\n";
  }
  return cells;
}

void append(std::vector<std::string>& a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
}

std::vector<std::string> sim_header(const char* q) {
  return {std::string(q) + "_sim", std::string(q) + "_sim_stderr"};
}

int cmd_cop(const Options& o) {
  const auto net = make_network(base_params(o));
  Csv csv(o.out);
  std::vector<std::string> header{"k", "beta_t_db", "cop_analytic", "cop_il", "cop_low"};
  if (o.simulate) append(header, sim_header("cop"));
  csv.row(header);
  for (double b : parse_list(o.beta_db.empty() ? "0:2:20" : o.beta_db)) {
    std::vector<std::string> row{std::to_string(o.k), fmt(b)};
    append(row, cop_cells(net.get(), o, o.rho, o.k, b, o.simulate));
    csv.row(row);
  }
  csv.flush();
  return kExitOk;
}

int cmd_sop(const Options& o) {
  const auto net = make_network(base_params(o));
  Csv csv(o.out);
  std::vector<std::string> header{"beta_e_db", "sop_analytic", "sop_il"};
  if (o.simulate) append(header, sim_header("sop"));
  csv.row(header);
  for (double b : parse_list(o.beta_db.empty() ? "-10:2:20" : o.beta_db)) {
    std::vector<std::string> row{fmt(b)};
    append(row, sop_cells(net.get(), o, o.rho, b, o.simulate));
    csv.row(row);
  }
  csv.flush();
  return kExitOk;
}

int cmd_throughput(const Options& o) {
  const auto net = make_network(base_params(o));
  Csv csv(o.out);
  csv.row({"k", "R_s", "T_k", "cop_low"});
  for (double rs : parse_list(o.rates)) {
    double T = 0.0, cop = 0.0;
    check(secwsn_sensor_throughput(net.get(), o.rho, o.epsilon, o.k, rs, sop_model(o), &T, &cop),
          "throughput");
    csv.row({std::to_string(o.k), fmt(rs), fmt(T), fmt(cop)});
  }
  csv.flush();
  return kExitOk;
}

const char* case_name(secwsn_subopt_case c) {
  switch (c) {
    case SECWSN_CASE_LOWER_BOUND: return "rho_min";
    case SECWSN_CASE_FULL_JAMMING: return "full";
    case SECWSN_CASE_INTERIOR: return "interior";
    default: return "infeasible";
  }
}

int cmd_optimize(const Options& o) {
  const auto params = base_params(o);
  const auto net = make_network(params);
  std::vector<secwsn_scheme> schemes;
  if (o.scheme == "optimal" || o.scheme == "both") schemes.push_back(SECWSN_SCHEME_OPTIMAL);
  if (o.scheme == "suboptimal" || o.scheme == "both") schemes.push_back(SECWSN_SCHEME_SUBOPTIMAL);

  Csv csv(o.out);
  std::vector<std::string> header{"scheme", "sigma", "epsilon", "feasible", "case",
                                  "rho", "T_sum", "sop", "cop_ok", "sop_ok",
                                  "G_residual", "blocking_k"};
  for (int k = 1; k <= params.K; ++k)
    for (const char* c : {"R_t_", "R_s_", "R_e_", "T_", "cop_low_", "cop_il_"})
      header.push_back(c + std::to_string(k));
  csv.row(header);
  bool all_feasible = true;
  for (auto scheme : schemes) {
    secwsn_design* raw = nullptr;
    if (scheme == SECWSN_SCHEME_OPTIMAL)
      check(secwsn_optimal_design(net.get(), o.sigma, o.epsilon, o.rho_step, sop_model(o), &raw),
            "optimal_design");
    else
      check(secwsn_suboptimal_design(net.get(), o.sigma, o.epsilon, &raw), "suboptimal_design");
    Design d(raw);
    secwsn_design_summary s;
    check(secwsn_design_get_summary(d.get(), &s), "design");
    all_feasible = all_feasible && s.feasible;
    std::vector<std::string> row{
        scheme == SECWSN_SCHEME_OPTIMAL ? "optimal" : "suboptimal",
        fmt(o.sigma), fmt(o.epsilon), std::to_string(s.feasible),
        scheme == SECWSN_SCHEME_OPTIMAL ? "-" : case_name(s.sub_case),
        fmt(s.rho), fmt(s.T_sum), fmt(s.sop), std::to_string(s.cop_ok),
        std::to_string(s.sop_ok), fmt(s.G_residual), std::to_string(s.blocking_k)};
    for (int k = 1; k <= s.K; ++k) {
      secwsn_sensor_design sd;
      check(secwsn_design_get_sensor(d.get(), k, &sd), "design");
      for (double v : {sd.R_t, sd.R_s, sd.R_e, sd.throughput, sd.cop_low, sd.cop_il})
        row.push_back(fmt(v));
    }
    csv.row(row);
  }
  csv.flush();
  if (!all_feasible) {
    std::cerr << "infeasible: no design meets sigma=" << o.sigma
              << " epsilon=" << o.epsilon << '\n';
    return kExitInfeasible;
  }
  return kExitOk;
}

int cmd_simulate(const Options& o) {
  const auto net = make_network(base_params(o));
  const auto opts = sim_options(o);
  const double beta = db_to_linear(o.threshold_db);
  secwsn_estimate e;
  if (o.quantity == "cop")
    check(secwsn_simulate_cop(net.get(), o.rho, o.k, beta, &opts, &e), "simulate_cop");
  else
    check(secwsn_simulate_sop(net.get(), o.rho, beta, &opts, &e), "simulate_sop");
  Csv csv(o.out);
  csv.row({"quantity", "k", "threshold_db", "rho", "p_hat", "std_error", "trials", "seed",
           "outages", "r_max", "tail_warning"});
  csv.row({o.quantity, o.quantity == "cop" ? std::to_string(o.k) : "-", fmt(o.threshold_db),
           fmt(o.rho), fmt(e.p_hat), fmt(e.std_error), std::to_string(e.trials),
           std::to_string(e.seed), std::to_string(e.outages), fmt(e.r_max),
           std::to_string(e.tail_warning)});
  csv.flush();
  return kExitOk;
}

// Applies one swept value; returns the rho/sigma/epsilon overrides through `o`.
void apply_param(const std::string& name, double v, secwsn_network_params& p, Options& o) {
  if (name == "lambda_s") p.lambda_s = v;
  else if (name == "lambda_c") p.lambda_c = v;
  else if (name == "lambda_e") p.lambda_e = v;
  else if (name == "K") p.K = static_cast<int>(v);
  else if (name == "M_c") p.M_c = static_cast<int>(v);
  else if (name == "M_e") p.M_e = static_cast<int>(v);
  else if (name == "P_a_dbm") p.P_a_mw = secwsn_dbm_to_linear(v);
  else if (name == "P_j_dbm") p.P_j_mw = secwsn_dbm_to_linear(v);
  else if (name == "alpha") p.alpha = v;
  else if (name == "rho") o.rho = v;
  else if (name == "sigma") o.sigma = v;
  else if (name == "epsilon") o.epsilon = v;
  else throw CliError(kExitError, "unknown sweep parameter '" + name + "'");
}

int cmd_sweep(const Options& o) {
  if (o.param.empty() || o.values.empty())
    throw CliError(kExitError, "sweep needs --param and --values");
  const auto base = base_params(o);
  Csv csv(o.out);
  std::vector<std::string> header{o.param};
  if (o.quantity == "cop") {
    header.insert(header.end(), {"cop_analytic", "cop_il", "cop_low"});
    if (o.simulate) append(header, sim_header("cop"));
  } else if (o.quantity == "sop") {
    header.insert(header.end(), {"sop_analytic", "sop_il"});
    if (o.simulate) append(header, sim_header("sop"));
  } else if (o.quantity == "optimal" || o.quantity == "suboptimal") {
    header.insert(header.end(), {"feasible", "rho", "T_sum"});
  } else {
    throw CliError(kExitError, "sweep --quantity must be cop, sop, optimal or suboptimal");
  }
  csv.row(header);
  const double beta_db = o.beta_db.empty() ? 0.0 : parse_list(o.beta_db).front();
  for (double v : parse_list(o.values)) {
    auto p = base;
    Options local = o;
    apply_param(o.param, v, p, local);
    const auto net = make_network(p);
    std::vector<std::string> row{fmt(v)};
    if (o.quantity == "cop") {
      append(row, cop_cells(net.get(), local, local.rho, local.k, beta_db, o.simulate));
    } else if (o.quantity == "sop") {
      append(row, sop_cells(net.get(), local, local.rho, beta_db, o.simulate));
    } else {
      secwsn_design* raw = nullptr;
      if (o.quantity == "optimal")
        check(secwsn_optimal_design(net.get(), local.sigma, local.epsilon, o.rho_step,
                                    sop_model(o), &raw),
              "optimal_design");
      else
        check(secwsn_suboptimal_design(net.get(), local.sigma, local.epsilon, &raw),
              "suboptimal_design");
      Design d(raw);
      secwsn_design_summary s;
      check(secwsn_design_get_summary(d.get(), &s), "design");
      row.insert(row.end(), {std::to_string(s.feasible), fmt(s.rho), fmt(s.T_sum)});
    }
    csv.row(row);
  }
  csv.flush();
  return kExitOk;
}

// ---- figure reproduction --------------------------------------------------

std::string or_default(const std::string& s, const char* fallback) {
  return s.empty() ? fallback : s;
}

// Caption defaults shared by all figures.
secwsn_network_params caption_base(const Options& o) {
  auto p = base_params(o);
  if (o.config.empty()) {
    p.lambda_s = 1.0;
    p.P_a_mw = secwsn_dbm_to_linear(10.0);
    p.omega_mw = secwsn_dbm_to_linear(0.0);
    p.alpha = 4.0;
  }
  return p;
}

int figure_2(const Options& o) {
  auto base = caption_base(o);
  base.P_j_mw = secwsn_dbm_to_linear(10.0);
  base.lambda_c = 0.01;
  const double rho = 0.05;
  Csv csv(o.out);
  csv.row({"M_c", "K", "beta_t_db", "cop_analytic", "cop_il", "cop_sim", "cop_sim_stderr"});
  const auto betas = parse_list(or_default(o.beta_db, "0:2:20"));
  for (int Mc : parse_int_list(or_default(o.Mc_list, "8,16")))
    for (int K : parse_int_list(or_default(o.K_list, "2,3"))) {
      auto p = base;
      p.M_c = Mc;
      p.K = K;
      const auto net = make_network(p);
      for (double b : betas) {
        auto cells = cop_cells(net.get(), o, rho, 1, b, true);
        cells.erase(cells.begin() + 2);  // cop_low is not part of this figure
        std::vector<std::string> row{std::to_string(Mc), std::to_string(K), fmt(b)};
        append(row, cells);
        csv.row(row);
      }
    }
  csv.flush();
  return kExitOk;
}

int figure_3(const Options& o) {
  auto base = caption_base(o);
  base.P_j_mw = secwsn_dbm_to_linear(10.0);
  base.lambda_c = 0.01;
  base.K = 3;
  const double rho = 0.05;
  Csv csv(o.out);
  csv.row({"M_e", "lambda_e", "beta_e_db", "sop_analytic", "sop_il", "sop_sim",
           "sop_sim_stderr"});
  const auto betas = parse_list(or_default(o.beta_db, "-10:2:20"));
  for (int Me : parse_int_list(or_default(o.Me_list, "1,2")))
    for (double le : parse_list(or_default(o.lambda_e_list, "1e-4,1e-3"))) {
      auto p = base;
      p.M_e = Me;
      p.lambda_e = le;
      const auto net = make_network(p);
      for (double b : betas) {
        std::vector<std::string> row{std::to_string(Me), fmt(le), fmt(b)};
        append(row, sop_cells(net.get(), o, rho, b, true));
        csv.row(row);
      }
    }
  csv.flush();
  return kExitOk;
}

int figure_4(const Options& o) {
  auto base = caption_base(o);
  base.P_j_mw = secwsn_dbm_to_linear(0.0);
  base.M_c = 16;
  base.M_e = 2;
  base.K = 4;
  const double rho = 0.01;
  const double epsilon = 0.1;
  Csv csv(o.out);
  csv.row({"lambda_c", "lambda_e", "R_s", "T_k", "cop_low"});
  const auto rates = parse_list(o.rates);
  for (double lc : parse_list(or_default(o.lambda_c_list, "0.01,0.02")))
    for (double le : parse_list(or_default(o.lambda_e_list, "1e-4,1e-3"))) {
      auto p = base;
      p.lambda_c = lc;
      p.lambda_e = le;
      const auto net = make_network(p);
      for (double rs : rates) {
        double T = 0.0, cop = 0.0;
        check(secwsn_sensor_throughput(net.get(), rho, epsilon, 1, rs, sop_model(o), &T, &cop),
              "throughput");
        csv.row({fmt(lc), fmt(le), fmt(rs), fmt(T), fmt(cop)});
      }
    }
  csv.flush();
  return kExitOk;
}

secwsn_network_params figure_56_base(const Options& o) {
  auto p = caption_base(o);
  p.P_j_mw = secwsn_dbm_to_linear(1.0);
  p.lambda_c = 0.01;
  p.M_c = 16;
  p.K = 4;
  p.M_e = 2;
  p.lambda_e = 1e-4;
  return p;
}

int figure_5(const Options& o) {
  const auto net = make_network(figure_56_base(o));
  Csv csv(o.out);
  csv.row({"sigma", "epsilon", "rho", "T_optimal", "T_suboptimal"});
  const auto rhos = parse_list(or_default(o.rho_list, "0.01:0.01:1"));
  for (double sigma : parse_list(or_default(o.sigma_list, "0.1,0.2")))
    for (double eps : parse_list(or_default(o.epsilon_list, "0.05,0.1")))
      for (double rho : rhos) {
        double T_opt = 0.0, T_sub = 0.0;
        check(secwsn_optimal_throughput_at(net.get(), rho, sigma, eps, sop_model(o), &T_opt),
              "optimal_throughput");
        check(secwsn_suboptimal_throughput(net.get(), rho, sigma, eps, &T_sub),
              "suboptimal_throughput");
        csv.row({fmt(sigma), fmt(eps), fmt(rho), fmt(T_opt), fmt(T_sub)});
      }
  csv.flush();
  return kExitOk;
}

int figure_6(const Options& o) {
  auto base = figure_56_base(o);
  const double sigma = 0.2;
  struct Family {
    double epsilon;
    double lambda_c;
    int M_c;
  };
  // Base curve plus one-at-a-time variations of epsilon, lambda_c and M_c.
  const std::vector<Family> families{
      {0.1, 0.01, 16}, {0.05, 0.01, 16}, {0.1, 0.02, 16}, {0.1, 0.01, 32}};
  Csv csv(o.out);
  csv.row({"epsilon", "lambda_c", "M_c", "lambda_e", "T_optimal", "rho_optimal",
           "T_suboptimal", "rho_suboptimal"});
  const auto lambdas = parse_list(
      or_default(o.lambda_e_list, "1e-5,2e-5,5e-5,1e-4,2e-4,5e-4,1e-3"));
  for (const auto& f : families)
    for (double le : lambdas) {
      auto p = base;
      p.lambda_c = f.lambda_c;
      p.M_c = f.M_c;
      p.lambda_e = le;
      const auto net = make_network(p);
      secwsn_design* raw = nullptr;
      check(secwsn_optimal_design(net.get(), sigma, f.epsilon, o.rho_step, sop_model(o), &raw),
            "optimal_design");
      Design opt(raw);
      check(secwsn_suboptimal_design(net.get(), sigma, f.epsilon, &raw), "suboptimal_design");
      Design sub(raw);
      secwsn_design_summary so, ss;
      check(secwsn_design_get_summary(opt.get(), &so), "design");
      check(secwsn_design_get_summary(sub.get(), &ss), "design");
      csv.row({fmt(f.epsilon), fmt(f.lambda_c), std::to_string(f.M_c), fmt(le),
               fmt(so.T_sum), fmt(so.rho), fmt(ss.T_sum), fmt(ss.rho)});
    }
  csv.flush();
  return kExitOk;
}

int cmd_figure(const Options& o) {
  switch (o.figure) {
    case 2: return figure_2(o);
    case 3: return figure_3(o);
    case 4: return figure_4(o);
    case 5: return figure_5(o);
    case 6: return figure_6(o);
    default: throw CliError(kExitError, "figure must be one of 2, 3, 4, 5, 6");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secwsn: outage analytics, Monte Carlo and secrecy throughput design"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--config", o.config, "network config file (key=value)");
    c->add_option("--out", o.out, "CSV output path (default stdout)");
    c->add_option("--rho", o.rho, "jamming probability")->capture_default_str();
    c->add_option("--sigma", o.sigma, "COP constraint")->capture_default_str();
    c->add_option("--epsilon", o.epsilon, "SOP constraint")->capture_default_str();
    c->add_option("--model", o.model, "SOP model for designs")
        ->check(CLI::IsMember({"general", "il"}))
        ->capture_default_str();
    c->add_option("--trials", o.trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    c->add_option("--threads", o.threads, "worker threads, 0 = all cores");
    c->add_option("--r-max", o.r_max, "simulation radius, 0 = default");
    c->add_option("--jammer-mode", o.jammer_mode, "SOP jammer field")
        ->check(CLI::IsMember({"per-eve", "common"}))
        ->capture_default_str();
    c->add_option("--k", o.k, "sensor index (1 = nearest)")->capture_default_str();
    c->add_option("--beta-db", o.beta_db, "threshold list in dB (a,b or start:step:stop)");
    c->add_option("--rho-step", o.rho_step, "rho grid step for the optimal scheme")
        ->capture_default_str();
  };

  auto* cop = app.add_subcommand("cop", "COP versus beta_t");
  common(cop);
  cop->add_flag("--simulate", o.simulate, "add Monte Carlo columns");
  auto* sop = app.add_subcommand("sop", "SOP versus beta_e");
  common(sop);
  sop->add_flag("--simulate", o.simulate, "add Monte Carlo columns");
  auto* tp = app.add_subcommand("throughput", "T_k versus secrecy rate");
  common(tp);
  tp->add_option("--rates", o.rates, "secrecy rate list")->capture_default_str();
  auto* opt = app.add_subcommand("optimize", "throughput-maximizing design");
  common(opt);
  opt->add_option("--scheme", o.scheme)
      ->check(CLI::IsMember({"optimal", "suboptimal", "both"}))
      ->capture_default_str();
  auto* sim = app.add_subcommand("simulate", "single Monte Carlo estimate");
  common(sim);
  sim->add_option("--quantity", o.quantity)->check(CLI::IsMember({"cop", "sop"}));
  sim->add_option("--threshold-db", o.threshold_db, "beta_t or beta_e in dB");
  auto* sweep = app.add_subcommand("sweep", "one parameter sweep");
  common(sweep);
  sweep->add_option("--param", o.param,
                    "lambda_s, lambda_c, lambda_e, K, M_c, M_e, P_a_dbm, P_j_dbm, "
                    "alpha, rho, sigma, epsilon");
  sweep->add_option("--values", o.values, "value list");
  sweep->add_option("--quantity", o.quantity, "cop, sop, optimal or suboptimal");
  sweep->add_flag("--simulate", o.simulate, "add Monte Carlo columns");
  auto* fig = app.add_subcommand("reproduce-figure", "tables behind figures 2-6");
  common(fig);
  fig->add_option("figure", o.figure, "figure number")->required();
  fig->add_option("--Mc", o.Mc_list, "figure 2 M_c family");
  fig->add_option("--K", o.K_list, "figure 2 K family");
  fig->add_option("--Me", o.Me_list, "figure 3 M_e family");
  fig->add_option("--lambda-e", o.lambda_e_list, "eavesdropper densities");
  fig->add_option("--lambda-c", o.lambda_c_list, "figure 4 FC densities");
  fig->add_option("--sigmas", o.sigma_list, "figure 5 sigma family");
  fig->add_option("--epsilons", o.epsilon_list, "figure 5 epsilon family");
  fig->add_option("--rhos", o.rho_list, "figure 5 rho grid");
  fig->add_option("--rates", o.rates, "figure 4 secrecy rates")->capture_default_str();
  fig->add_flag("--simulate", o.simulate, "accepted; figures 2 and 3 always simulate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (cop->parsed()) return cmd_cop(o);
    if (sop->parsed()) return cmd_sop(o);
    if (tp->parsed()) return cmd_throughput(o);
    if (opt->parsed()) return cmd_optimize(o);
    if (sim->parsed()) return cmd_simulate(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (fig->parsed()) return cmd_figure(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
