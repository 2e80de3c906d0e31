// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#include "network_model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "core_math.hpp"
#include "error.hpp"

namespace secwsn {

std::vector<std::string> NetworkConfig::validate() const {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  require(positive(lambda_s) && positive(lambda_c) && positive(lambda_e),
          ErrorCode::config, "densities must be finite and > 0");
  require(positive(P_a) && positive(P_j), ErrorCode::config,
          "powers must be finite and > 0");
  require(omega >= 0.0 && std::isfinite(omega), ErrorCode::config,
          "noise power must be finite and >= 0");
  require(alpha > 2.0 && std::isfinite(alpha), ErrorCode::config,
          "path-loss exponent must exceed 2");
  require(K >= 1 && K <= math::kMaxScheduled, ErrorCode::config,
          "K must be in [1, 30]");
  require(M_e >= 1, ErrorCode::config, "M_e must be >= 1");
  require(K < M_c, ErrorCode::config, "need K < M_c");
  require(lambda_s > K * lambda_c, ErrorCode::config,
          "need lambda_s > K * lambda_c (idle sensors must exist)");
  std::vector<std::string> warnings;
  if (lambda_s < 10.0 * K * lambda_c)
    warnings.emplace_back(
        "lambda_s < 10 K lambda_c: the dense-sensor assumption is weak");
  return warnings;
}

DerivedDensities derive_densities(const NetworkConfig& cfg, double rho) {
  cfg.validate();
  require(rho >= 0.0 && rho <= 1.0, ErrorCode::domain,
          "jamming probability must lie in [0, 1]");
  const double delta = 2.0 / cfg.alpha;
  DerivedDensities d{};
  d.lambda_a = cfg.K * cfg.lambda_c;
  d.lambda_i = cfg.lambda_s - d.lambda_a;
  d.rho = rho;
  d.lambda_j = rho * d.lambda_i;
  d.lambda_o = d.lambda_a + std::pow(cfg.P_j / cfg.P_a, delta) * d.lambda_j;
  return d;
}

double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }
double linear_to_dbm(double milliwatts) { return 10.0 * std::log10(milliwatts); }

double rate_to_threshold(double rate) {
  return std::expm1(rate * std::numbers::ln2);
}

double threshold_to_rate(double beta) {
  return std::log1p(beta) / std::numbers::ln2;
}

WiretapCode WiretapCode::from_rates(double secrecy_rate, double redundancy_rate) {
  require(secrecy_rate >= 0.0 && redundancy_rate >= 0.0, ErrorCode::domain,
          "wiretap rates must be >= 0");
  return {secrecy_rate, redundancy_rate};
}

WiretapCode WiretapCode::from_thresholds(double beta_s, double beta_e) {
  require(beta_s >= 0.0 && beta_e >= 0.0, ErrorCode::domain,
          "wiretap thresholds must be >= 0");
  return {threshold_to_rate(beta_s), threshold_to_rate(beta_e)};
}

void OutageConstraints::validate() const {
  require(sigma > 0.0 && sigma < 1.0, ErrorCode::domain,
          "sigma must lie in (0, 1)");
  require(epsilon > 0.0 && epsilon < 1.0, ErrorCode::domain,
          "epsilon must lie in (0, 1)");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  require(ec == std::errc() && ptr == end && std::isfinite(out),
          ErrorCode::config,
          "config: value of '" + std::string(key) + "' is not a number: '" +
              std::string(value) + "'");
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  require(ec == std::errc() && ptr == end, ErrorCode::config,
          "config: value of '" + std::string(key) +
              "' is not an integer: '" + std::string(value) + "'");
  return out;
}

}  // namespace

NetworkConfig parse_config(std::string_view text) {
  static const char* const kRequired[] = {"lambda_s", "lambda_c", "lambda_e",
                                          "K",        "M_c",      "M_e",
                                          "P_a_dbm",  "P_j_dbm",  "alpha"};
  std::map<std::string, std::string, std::less<>> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string_view::npos, ErrorCode::config,
            "config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    bool known = key == "omega_dbm" || key == "omega";
    for (const char* k : kRequired) known = known || key == k;
    require(known, ErrorCode::config, "config: unknown key '" + key + "'");
    require(!entries.contains(key), ErrorCode::config,
            "config: duplicate key '" + key + "'");
    entries.emplace(key, value);
  }
  for (const char* k : kRequired)
    require(entries.contains(k), ErrorCode::config,
            std::string("config: missing key '") + k + "'");
  const bool has_dbm = entries.contains("omega_dbm");
  const bool has_literal = entries.contains("omega");
  require(has_dbm != has_literal, ErrorCode::config,
          "config: exactly one of omega_dbm or omega=0 is required");

  NetworkConfig cfg;
  cfg.lambda_s = parse_real("lambda_s", entries.at("lambda_s"));
  cfg.lambda_c = parse_real("lambda_c", entries.at("lambda_c"));
  cfg.lambda_e = parse_real("lambda_e", entries.at("lambda_e"));
  cfg.K = parse_int("K", entries.at("K"));
  cfg.M_c = parse_int("M_c", entries.at("M_c"));
  cfg.M_e = parse_int("M_e", entries.at("M_e"));
  cfg.P_a = dbm_to_linear(parse_real("P_a_dbm", entries.at("P_a_dbm")));
  cfg.P_j = dbm_to_linear(parse_real("P_j_dbm", entries.at("P_j_dbm")));
  cfg.alpha = parse_real("alpha", entries.at("alpha"));
  if (has_dbm) {
    cfg.omega = dbm_to_linear(parse_real("omega_dbm", entries.at("omega_dbm")));
  } else {
    require(parse_real("omega", entries.at("omega")) == 0.0, ErrorCode::config,
            "config: 'omega' only accepts the literal 0; use omega_dbm");
    cfg.omega = 0.0;
  }
  cfg.validate();
  return cfg;
}

NetworkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::io,
          "cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace secwsn
