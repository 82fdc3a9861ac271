#pragma once

#include <span>
#include <vector>

#include "isac/core.hpp"

namespace isac::asymp {

enum class Regime { LowSnr, HighSnr };

/// One regime/policy comparison row. K = T_d/M matters in the high-SNR
/// regime only and is set to 0 for low-SNR reports.
struct AsymptoticReport {
  Regime regime = Regime::LowSnr;
  Power policy = Power::Optimal;
  double rho_eff_ps = 0.0;
  double rho_eff_das = 0.0;
  double gain_ratio = 0.0;
  double K = 0.0;
};

struct LowSnrPair {
  double ps = 0.0;
  double das = 0.0;
};

/// First-order small-rho effective SNRs. Optimal power:
/// (T^2 rho^2/(4M(T-M)), T^2 rho^2/(2M(T-M))). Equal power:
/// (rho^2 T/(2M) for T >= 2M else rho^2, rho^2 T/M).
LowSnrPair low_snr_eff_snr(const SystemConfig& config, Power policy, double rho);

/// Large-rho effective SNR (one table entry), K = T_d/M > 1:
///   PS / optimal:  (1+K)/(1+sqrt(K))^2 * rho
///   DAS / optimal: (1+K)/4 * rho for 1 < K < 2, (K^2-1)/K^2 * rho for K >= 2
///   PS / equal:    rho/2
///   DAS / equal:   2/(2 + sqrt(K^2+4) - K) * rho
double high_snr_eff_snr(Power policy, Sensing sensing, double K, double rho);

/// Large-rho DAS/PS effective SNR ratio; strictly greater than 1 for K > 1.
double high_snr_gain_ratio(Power policy, double K);

AsymptoticReport high_snr_report(Power policy, double K, double rho);

/// Exact effective SNRs of both schemes at the small-rho optimal
/// allocations, per policy; the optimal-power ratio approaches 2.
struct LowSnrRow {
  double rho = 0.0;
  double ps_opt = 0.0;
  double das_opt = 0.0;
  double ratio_opt = 0.0;
  double ps_eq = 0.0;
  double das_eq = 0.0;
  double ratio_eq = 0.0;
};

std::vector<LowSnrRow> verify_low_snr_limit(const SystemConfig& config,
                                            std::span<const double> rho_grid);

/// Normalized large-rho gaps 1 - rho_eff/rho under optimal power and their
/// fitted log-log decay rates. `*_rate` is the observed order taken from the
/// final consecutive grid pair (the standard asymptotic-rate estimate);
/// `*_ls_slope` is the least-squares slope over the whole grid.
struct ConvergencePoint {
  double K = 0.0;
  double das_gap = 0.0;
  double ps_gap = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergencePoint> points;
  double das_rate = 0.0;
  double ps_rate = 0.0;
  double das_ls_slope = 0.0;
  double ps_ls_slope = 0.0;
};

ConvergenceReport verify_high_snr_convergence(std::span<const double> K_grid);

}  // namespace isac::asymp
