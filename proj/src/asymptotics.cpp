#include "isac/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isac/das_sensing.hpp"

namespace isac::asymp {

namespace {

void require_K(double K) {
  if (!(K > 1.0)) throw std::domain_error("high-SNR asymptotics need K = T_d/M > 1");
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

/// Exact DAS effective SNR at an explicit allocation, through the
/// large-dimension MSE and the distortion-to-SNR map.
double das_exact_rho_eff(const SystemConfig& config, double rho_tau, double rho_d, double T_tau) {
  const double c = 1.0 + rho_tau * T_tau / static_cast<double>(config.M);
  const double D = das::rmt_mse(config.N, config.M, c, rho_d, config.T - T_tau);
  return distortion_to_effective_snr(rho_d, D, config.N, config.M);
}

}  // namespace

LowSnrPair low_snr_eff_snr(const SystemConfig& config, Power policy, double rho) {
  if (!(rho > 0.0)) throw std::domain_error("low_snr_eff_snr: rho must be positive");
  if (!config.has_data_phase()) throw std::invalid_argument("low_snr_eff_snr: requires T > M");
  const double m = static_cast<double>(config.M);
  const double T = config.T;
  LowSnrPair out;
  if (policy == Power::Optimal) {
    out.ps = T * T * rho * rho / (4.0 * m * (T - m));
    out.das = T * T * rho * rho / (2.0 * m * (T - m));
  } else {
    out.ps = T >= 2.0 * m ? rho * rho * T / (2.0 * m) : rho * rho;
    out.das = rho * rho * T / m;
  }
  return out;
}

double high_snr_eff_snr(Power policy, Sensing sensing, double K, double rho) {
  require_K(K);
  if (policy == Power::Optimal) {
    if (sensing == Sensing::PS) {
      const double root = 1.0 + std::sqrt(K);
      return (1.0 + K) / (root * root) * rho;
    }
    return K < 2.0 ? (1.0 + K) / 4.0 * rho : (K * K - 1.0) / (K * K) * rho;
  }
  if (sensing == Sensing::PS) return 0.5 * rho;
  return 2.0 / (2.0 + std::sqrt(K * K + 4.0) - K) * rho;
}

double high_snr_gain_ratio(Power policy, double K) {
  require_K(K);
  if (policy == Power::Optimal) {
    const double root = 1.0 + std::sqrt(K);
    if (K < 2.0) return root * root / 4.0;
    return (K - 1.0) * root * root / (K * K);
  }
  return 4.0 / (2.0 + std::sqrt(K * K + 4.0) - K);
}

AsymptoticReport high_snr_report(Power policy, double K, double rho) {
  AsymptoticReport report;
  report.regime = Regime::HighSnr;
  report.policy = policy;
  report.K = K;
  report.rho_eff_ps = high_snr_eff_snr(policy, Sensing::PS, K, rho);
  report.rho_eff_das = high_snr_eff_snr(policy, Sensing::DAS, K, rho);
  report.gain_ratio = report.rho_eff_das / report.rho_eff_ps;
  return report;
}

std::vector<LowSnrRow> verify_low_snr_limit(const SystemConfig& config,
                                            std::span<const double> rho_grid) {
  if (!config.has_data_phase())
    throw std::invalid_argument("verify_low_snr_limit: requires T > M");
  const double m = static_cast<double>(config.M);
  const double T = config.T;
  std::vector<LowSnrRow> rows;
  rows.reserve(rho_grid.size());
  for (double rho : rho_grid) {
    LowSnrRow row;
    row.rho = rho;

    // Optimal power: the small-rho split equalizes pilot and data energy
    // (T_tau = M); both schemes are evaluated at this same allocation.
    const double rho_tau = rho * T / (2.0 * m);
    const double rho_d = rho * T / (2.0 * (T - m));
    row.ps_opt = effective_snr(rho_tau, rho_d, m, config.M);
    row.das_opt = das_exact_rho_eff(config, rho_tau, rho_d, m);
    row.ratio_opt = row.das_opt / row.ps_opt;

    // Equal power: PS picks T_tau = max(M, T/2); the DAS distortion does
    // not depend on the split at first order, T_tau = M.
    const double T_tau_ps = std::max(m, T / 2.0);
    row.ps_eq = effective_snr(rho, rho, T_tau_ps, config.M);
    row.das_eq = das_exact_rho_eff(config, rho, rho, m);
    row.ratio_eq = row.das_eq / row.ps_eq;
    rows.push_back(row);
  }
  return rows;
}

ConvergenceReport verify_high_snr_convergence(std::span<const double> K_grid) {
  if (K_grid.size() < 2)
    throw std::invalid_argument("verify_high_snr_convergence: need at least two K values");
  ConvergenceReport report;
  std::vector<double> log_K, log_das, log_ps;
  for (double K : K_grid) {
    if (!(K >= 2.0))
      throw std::domain_error("verify_high_snr_convergence: K values must be >= 2");
    ConvergencePoint p;
    p.K = K;
    p.das_gap = 1.0 - high_snr_eff_snr(Power::Optimal, Sensing::DAS, K, 1.0);
    p.ps_gap = 1.0 - high_snr_eff_snr(Power::Optimal, Sensing::PS, K, 1.0);
    report.points.push_back(p);
    log_K.push_back(std::log(K));
    log_das.push_back(std::log(p.das_gap));
    log_ps.push_back(std::log(p.ps_gap));
  }
  const std::size_t n = log_K.size();
  const double dk = log_K[n - 1] - log_K[n - 2];
  report.das_rate = (log_das[n - 1] - log_das[n - 2]) / dk;
  report.ps_rate = (log_ps[n - 1] - log_ps[n - 2]) / dk;
  report.das_ls_slope = least_squares_slope(log_K, log_das);
  report.ps_ls_slope = least_squares_slope(log_K, log_ps);
  return report;
}

}  // namespace isac::asymp
