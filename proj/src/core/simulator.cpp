// Copyright 2026 The secwsn Authors
// SPDX-License-Identifier: Apache-2.0
#include "simulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <thread>

#include "core_math.hpp"
#include "error.hpp"

namespace secwsn {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kJammerTruncation = 1e-4;
constexpr double kTailWarningRatio = 1e-3;

// Substream layout inside a trial's Philox stream.
constexpr std::uint32_t kServingStream = 0;
constexpr std::uint32_t kInterfererStream = 1;
constexpr std::uint32_t kJammerStream = 2;
constexpr std::uint32_t kEavesdropperStream = 0;
constexpr std::uint32_t kCommonJammerStream = 1;

class PathLoss {
 public:
  explicit PathLoss(double alpha)
      : half_alpha_(alpha / 2.0), squared_(alpha == 4.0) {}
  // r^(-alpha) given r^2.
  double operator()(double r2) const {
    return squared_ ? 1.0 / (r2 * r2) : std::pow(r2, -half_alpha_);
  }

 private:
  double half_alpha_;
  bool squared_;
};

// Points of a homogeneous PPP on a disk, emitted nearest first: pi lambda r_n^2
// are the arrival times of a unit-rate Poisson process.
class RadialArrivals {
 public:
  RadialArrivals(double density, double r_max, Philox4x32& rng)
      : inv_(density > 0.0 ? 1.0 / (kPi * density) : 0.0),
        r2_max_(r_max * r_max),
        rng_(rng),
        active_(density > 0.0) {}

  // Squared distance of the next point, or a negative value when exhausted.
  double next() {
    if (!active_) return -1.0;
    area_ += rng_.exponential();
    const double r2 = area_ * inv_;
    if (r2 > r2_max_) {
      active_ = false;
      return -1.0;
    }
    return r2;
  }

 private:
  double inv_;
  double r2_max_;
  Philox4x32& rng_;
  bool active_;
  double area_ = 0.0;
};

double mean_tail(double density, double power, double alpha, double r_max) {
  return 2.0 * kPi * density * power * std::pow(r_max, 2.0 - alpha) / (alpha - 2.0);
}

template <class MakeWorker>
std::uint64_t count_outages(std::uint64_t trials, unsigned threads,
                            const MakeWorker& make_worker) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
  std::vector<std::uint64_t> counts(threads, 0);
  auto run = [&](unsigned w) {
    auto worker = make_worker();
    const std::uint64_t begin = trials * w / threads;
    const std::uint64_t end = trials * (w + 1) / threads;
    std::uint64_t local = 0;
    for (std::uint64_t t = begin; t < end; ++t) local += worker(t) ? 1 : 0;
    counts[w] = local;
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

OutageEstimate make_estimate(std::uint64_t outages, const SimulationOptions& o,
                             double r_max, bool tail_warning) {
  OutageEstimate e;
  e.trials = o.trials;
  e.seed = o.seed;
  e.outages = outages;
  e.p_hat = static_cast<double>(outages) / static_cast<double>(o.trials);
  e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(o.trials));
  e.r_max = r_max;
  e.tail_warning = tail_warning;
  return e;
}

void check_options(const SimulationOptions& o) {
  require(o.trials >= 1, ErrorCode::domain, "simulation needs at least one trial");
  require(o.r_max >= 0.0 && std::isfinite(o.r_max), ErrorCode::domain,
          "simulation radius must be finite and > 0");
}

// Scratch space for one ZF-SIC realization.
struct ZfSicScratch {
  std::vector<Complex> channels;  // K x M_c, row per sensor
  std::vector<Complex> basis;     // orthonormal rows
  std::vector<Complex> residual;  // M_c
};

// Draws all K channels from `rng`, then projects h_k off the later streams.
// Leaves the residual in scratch.residual and returns its squared norm.
double zf_sic_signal_gain(int M_c, int K, int k, Philox4x32& rng,
                          ZfSicScratch& s) {
  s.channels.resize(static_cast<std::size_t>(K) * M_c);
  for (auto& c : s.channels) c = rng.complex_normal();
  s.basis.clear();
  int rank = 0;
  for (int j = k; j < K; ++j) {
    const Complex* h = &s.channels[static_cast<std::size_t>(j) * M_c];
    s.residual.assign(h, h + M_c);
    for (int b = 0; b < rank; ++b) {
      const Complex* e = &s.basis[static_cast<std::size_t>(b) * M_c];
      Complex dot{};
      for (int i = 0; i < M_c; ++i) dot += std::conj(e[i]) * s.residual[i];
      for (int i = 0; i < M_c; ++i) s.residual[i] -= dot * e[i];
    }
    double norm2 = 0.0;
    for (const auto& v : s.residual) norm2 += std::norm(v);
    const double inv = 1.0 / std::sqrt(norm2);
    for (const auto& v : s.residual) s.basis.push_back(v * inv);
    ++rank;
  }
  const Complex* h = &s.channels[static_cast<std::size_t>(k - 1) * M_c];
  s.residual.assign(h, h + M_c);
  for (int b = 0; b < rank; ++b) {
    const Complex* e = &s.basis[static_cast<std::size_t>(b) * M_c];
    Complex dot{};
    for (int i = 0; i < M_c; ++i) dot += std::conj(e[i]) * s.residual[i];
    for (int i = 0; i < M_c; ++i) s.residual[i] -= dot * e[i];
  }
  double gain = 0.0;
  for (const auto& v : s.residual) gain += std::norm(v);
  return gain;
}

class CopTrial {
 public:
  CopTrial(const NetworkConfig& cfg, const DerivedDensities& dens, int k,
           double beta_t, double r_max, std::uint64_t seed)
      : cfg_(cfg), dens_(dens), k_(k), beta_t_(beta_t), r_max_(r_max),
        seed_(seed), path_loss_(cfg.alpha), distances_(cfg.K) {}

  bool operator()(std::uint64_t trial) {
    if (beta_t_ == 0.0) return false;
    Philox4x32 serving(seed_, trial, kServingStream);
    math::sample_ordered_distances(cfg_.lambda_c, serving, distances_);
    const double gain = zf_sic_signal_gain(cfg_.M_c, cfg_.K, k_, serving, scratch_);
    const double L = distances_[k_ - 1];
    const double signal = cfg_.P_a * gain * path_loss_(L * L);
    // SINR < beta_t  <=>  interference > signal / beta_t - omega.
    const double limit = signal / beta_t_ - cfg_.omega;
    if (limit < 0.0) return true;
    double interference = 0.0;
    {
      Philox4x32 rng(seed_, trial, kInterfererStream);
      RadialArrivals field(dens_.lambda_a, r_max_, rng);
      for (double r2 = field.next(); r2 >= 0.0; r2 = field.next()) {
        interference += cfg_.P_a * rng.exponential() * path_loss_(r2);
        if (interference > limit) return true;
      }
    }
    {
      Philox4x32 rng(seed_, trial, kJammerStream);
      RadialArrivals field(dens_.lambda_j, r_max_, rng);
      for (double r2 = field.next(); r2 >= 0.0; r2 = field.next()) {
        interference += cfg_.P_j * rng.exponential() * path_loss_(r2);
        if (interference > limit) return true;
      }
    }
    return false;
  }

 private:
  const NetworkConfig& cfg_;
  const DerivedDensities& dens_;
  int k_;
  double beta_t_;
  double r_max_;
  std::uint64_t seed_;
  PathLoss path_loss_;
  std::vector<double> distances_;
  ZfSicScratch scratch_;
};

// h^H A^{-1} h for a Hermitian positive-definite A (row-major, n x n) via
// Cholesky; +inf when A is numerically singular.
double inverse_quadratic_form(const std::vector<Complex>& A,
                              const std::vector<Complex>& h, int n,
                              std::vector<Complex>& L, std::vector<Complex>& y) {
  L.assign(static_cast<std::size_t>(n) * n, Complex{});
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, A[i * n + i].real());
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * max_diag;
  if (!(max_diag > 0.0)) return std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      Complex s = A[i * n + j];
      for (int p = 0; p < j; ++p) s -= L[i * n + p] * std::conj(L[j * n + p]);
      if (i == j) {
        if (!(s.real() > floor)) return std::numeric_limits<double>::infinity();
        L[i * n + i] = std::sqrt(s.real());
      } else {
        L[i * n + j] = s / L[j * n + j];
      }
    }
  }
  y.assign(n, Complex{});
  double q = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex s = h[i];
    for (int p = 0; p < i; ++p) s -= L[i * n + p] * y[p];
    y[i] = s / L[i * n + i];
    q += std::norm(y[i]);
  }
  return q;
}

struct Point {
  double x;
  double y;
};

class SopTrial {
 public:
  SopTrial(const NetworkConfig& cfg, const DerivedDensities& dens,
           double beta_e, double r_max, std::uint64_t seed, JammerMode mode)
      : cfg_(cfg), dens_(dens), beta_e_(beta_e), r_max_(r_max), seed_(seed),
        mode_(mode), path_loss_(cfg.alpha), cut_r2_(jammer_cut_r2(cfg, dens)) {}

  bool operator()(std::uint64_t trial) {
    const int n = cfg_.M_e;
    Philox4x32 eve_rng(seed_, trial, kEavesdropperStream);
    RadialArrivals eavesdroppers(cfg_.lambda_e, r_max_, eve_rng);
    common_ready_ = false;
    std::uint32_t index = 0;
    for (double r2 = eavesdroppers.next(); r2 >= 0.0;
         r2 = eavesdroppers.next(), ++index) {
      const double angle = 2.0 * kPi * eve_rng.uniform();
      h_.resize(n);
      double h_norm2 = 0.0;
      for (auto& c : h_) {
        c = eve_rng.complex_normal();
        h_norm2 += std::norm(c);
      }
      const double signal = cfg_.P_a * path_loss_(r2);
      // Jammers only lower the MMSE SINR, so the noise-only value bounds it.
      if (cfg_.omega > 0.0 && signal * h_norm2 / cfg_.omega <= beta_e_) continue;
      const double r = std::sqrt(r2);
      if (intercepts(trial, index, signal, {r * std::cos(angle), r * std::sin(angle)}))
        return true;
    }
    return false;
  }

 private:
  // Jammers beyond this squared radius are dropped: their expected total
  // power stays below kJammerTruncation * omega, and omega bounds every
  // eigenvalue of the covariance from below. Without noise nothing is dropped.
  static double jammer_cut_r2(const NetworkConfig& cfg, const DerivedDensities& dens) {
    if (cfg.omega <= 0.0 || dens.lambda_j <= 0.0) return std::numeric_limits<double>::infinity();
    const double excess = cfg.alpha - 2.0;
    const double r = std::pow(2.0 * kPi * dens.lambda_j * cfg.P_j /
                                  (excess * kJammerTruncation * cfg.omega),
                              1.0 / excess);
    return r * r;
  }

  // Adds the jammer at squared distance r2 with a fresh channel from rng.
  void add_jammer(double r2, Philox4x32& rng) {
    const int n = cfg_.M_e;
    const double power = cfg_.P_j * path_loss_(r2);
    g_.resize(n);
    for (auto& c : g_) c = rng.complex_normal();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) psi_[i * n + j] += power * g_[i] * std::conj(g_[j]);
  }

  double sinr(double signal) {
    return signal * inverse_quadratic_form(psi_, h_, cfg_.M_e, chol_, y_);
  }

  // Whether the eavesdropper at `pos` decodes above beta_e.
  bool intercepts(std::uint64_t trial, std::uint32_t index, double signal,
                  Point pos) {
    const int n = cfg_.M_e;
    psi_.assign(static_cast<std::size_t>(n) * n, Complex{});
    for (int i = 0; i < n; ++i) psi_[i * n + i] = cfg_.omega;
    int added = 0;
    int next_check = cfg_.omega > 0.0 ? 1 : n;
    // Partial sums of a PSD series only decrease the SINR: stop as soon as
    // it drops to beta_e.
    auto below_threshold = [&]() {
      if (added < next_check) return false;
      next_check = added + std::max(1, added / 4);
      return sinr(signal) <= beta_e_;
    };
    auto negligible = [&](double r2) { return r2 > cut_r2_; };

    if (mode_ == JammerMode::per_eavesdropper) {
      Philox4x32 rng(seed_, trial, kJammerStream + index);
      RadialArrivals jammers(dens_.lambda_j, r_max_, rng);
      for (double r2 = jammers.next(); r2 >= 0.0; r2 = jammers.next()) {
        if (added > 0 && negligible(r2)) break;
        add_jammer(r2, rng);
        ++added;
        if (below_threshold()) return false;
      }
    } else {
      build_common_field(trial);
      order_.clear();
      for (std::size_t j = 0; j < common_.size(); ++j) {
        const double dx = common_[j].x - pos.x;
        const double dy = common_[j].y - pos.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 <= r_max_ * r_max_) order_.emplace_back(d2, j);
      }
      std::sort(order_.begin(), order_.end());
      Philox4x32 rng(seed_, trial, kJammerStream + index);
      for (const auto& [d2, j] : order_) {
        if (added > 0 && negligible(d2)) break;
        add_jammer(d2, rng);
        ++added;
        if (below_threshold()) return false;
      }
    }
    return sinr(signal) > beta_e_;
  }

  void build_common_field(std::uint64_t trial) {
    if (common_ready_) return;
    common_.clear();
    Philox4x32 rng(seed_, trial, kCommonJammerStream);
    // Jammers within r_max of any eavesdropper lie inside 2 r_max.
    RadialArrivals field(dens_.lambda_j, 2.0 * r_max_, rng);
    for (double r2 = field.next(); r2 >= 0.0; r2 = field.next()) {
      const double r = std::sqrt(r2);
      const double angle = 2.0 * kPi * rng.uniform();
      common_.push_back({r * std::cos(angle), r * std::sin(angle)});
    }
    common_ready_ = true;
  }

  const NetworkConfig& cfg_;
  const DerivedDensities& dens_;
  double beta_e_;
  double r_max_;
  std::uint64_t seed_;
  JammerMode mode_;
  PathLoss path_loss_;
  double cut_r2_;
  std::vector<Complex> h_, g_, psi_, chol_, y_;
  bool common_ready_ = false;
  std::vector<Point> common_;
  std::vector<std::pair<double, std::size_t>> order_;
};

}  // namespace

double default_r_max(const NetworkConfig& cfg) {
  return 30.0 / std::sqrt(kPi * cfg.lambda_c);
}

ZfSicDraw draw_zf_sic(int M_c, int K, int k, Philox4x32& rng) {
  require(K >= 1 && K < M_c && k >= 1 && k <= K, ErrorCode::domain,
          "draw_zf_sic: need 1 <= k <= K < M_c");
  ZfSicScratch s;
  ZfSicDraw draw{};
  draw.signal_gain = zf_sic_signal_gain(M_c, K, k, rng, s);
  const double inv = 1.0 / std::sqrt(draw.signal_gain);
  Complex dot{};
  for (int i = 0; i < M_c; ++i) dot += std::conj(s.residual[i] * inv) * rng.complex_normal();
  draw.interferer_gain = std::norm(dot);
  return draw;
}

OutageEstimate simulate_cop(const NetworkConfig& cfg, double rho, int k,
                            double beta_t, const SimulationOptions& options) {
  check_options(options);
  const auto dens = derive_densities(cfg, rho);
  require(k >= 1 && k <= cfg.K, ErrorCode::domain, "sensor index k must lie in [1, K]");
  require(beta_t >= 0.0 && std::isfinite(beta_t), ErrorCode::domain,
          "COP threshold must be finite and >= 0");
  const double r_max = options.r_max > 0.0 ? options.r_max : default_r_max(cfg);

  const double tail = mean_tail(dens.lambda_a, cfg.P_a, cfg.alpha, r_max) +
                      mean_tail(dens.lambda_j, cfg.P_j, cfg.alpha, r_max);
  const double reference =
      cfg.omega + cfg.P_a * std::pow(kPi * dens.lambda_o, cfg.alpha / 2.0);
  const bool warn = tail > kTailWarningRatio * reference;

  const auto outages = count_outages(options.trials, options.threads, [&] {
    return CopTrial(cfg, dens, k, beta_t, r_max, options.seed);
  });
  return make_estimate(outages, options, r_max, warn);
}

OutageEstimate simulate_sop(const NetworkConfig& cfg, double rho, double beta_e,
                            const SimulationOptions& options) {
  check_options(options);
  const auto dens = derive_densities(cfg, rho);
  require(beta_e >= 0.0 && std::isfinite(beta_e), ErrorCode::domain,
          "SOP threshold must be finite and >= 0");
  const double r_max = options.r_max > 0.0 ? options.r_max : default_r_max(cfg);

  bool warn = false;
  if (dens.lambda_j > 0.0) {
    const double tail = mean_tail(dens.lambda_j, cfg.P_j, cfg.alpha, r_max);
    const double reference =
        cfg.omega + cfg.P_j * std::pow(kPi * dens.lambda_j, cfg.alpha / 2.0);
    warn = tail > kTailWarningRatio * reference;
  }

  const auto outages = count_outages(options.trials, options.threads, [&] {
    return SopTrial(cfg, dens, beta_e, r_max, options.seed, options.jammer_mode);
  });
  return make_estimate(outages, options, r_max, warn);
}

ProbeReport convergence_probe(const NetworkConfig& cfg, double rho,
                              ProbeQuantity quantity, int k, double threshold,
                              const std::vector<double>& radii,
                              const SimulationOptions& options) {
  require(radii.size() >= 2, ErrorCode::domain,
          "convergence probe needs at least two radii");
  ProbeReport report{{}, std::numeric_limits<double>::quiet_NaN()};
  for (double r : radii) {
    require(r > 0.0, ErrorCode::domain, "probe radii must be > 0");
    SimulationOptions o = options;
    o.r_max = r;
    const auto est = quantity == ProbeQuantity::cop
                         ? simulate_cop(cfg, rho, k, threshold, o)
                         : simulate_sop(cfg, rho, threshold, o);
    if (!report.rows.empty() && std::isnan(report.converged_r_max)) {
      const auto& prev = report.rows.back().estimate;
      if (std::abs(est.p_hat - prev.p_hat) < std::max(est.std_error, 1e-300))
        report.converged_r_max = r;
    }
    report.rows.push_back({r, est});
  }
  return report;
}

}  // namespace secwsn
