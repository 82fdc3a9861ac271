#include "isac/pilot_sensing.hpp"

#include <algorithm>
#include <cmath>

#include "equal_power_search.hpp"

namespace isac::ps {

namespace {
constexpr double kDomainRelTol = 1e-9;
}

double mse_pilot_optimal(int N, int M, double rho_tau, double T_tau) {
  if (!(T_tau >= static_cast<double>(M)))
    throw std::domain_error("mse_pilot_optimal: T_tau must be >= M");
  if (!(rho_tau >= 0.0)) throw std::domain_error("mse_pilot_optimal: rho_tau must be >= 0");
  const double nm = static_cast<double>(N) * static_cast<double>(M);
  return nm / (1.0 + rho_tau * T_tau / static_cast<double>(M));
}

ResourceSplit opt_power_split(const SystemConfig& config, double D) {
  const double nm = config.prior_variance();
  const double m = static_cast<double>(config.M);
  if (!(D > 0.0) || D > nm * (1.0 + kDomainRelTol))
    throw std::domain_error("opt_power_split: D must lie in (0, N*M]");
  if (!config.has_data_phase()) throw std::invalid_argument("opt_power_split: requires T > M");

  ResourceSplit split;
  split.T_tau = m;
  split.rho_tau = std::max(0.0, (nm - D) / D);
  split.rho_d = (config.rho * config.T - m * split.rho_tau) / (config.T - m);
  if (split.rho_d < 0.0) {
    // Allow only rounding slack at the all-pilot endpoint D = D_min.
    if (split.rho_d < -kDomainRelTol * config.rho)
      throw std::domain_error("opt_power_split: D below the minimum feasible distortion");
    split.rho_d = 0.0;
  }
  return split;
}

double opt_rho_eff(const SystemConfig& config, double D) {
  const double nm = config.prior_variance();
  const double m = static_cast<double>(config.M);
  const double d_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);
  if (D < d_min * (1.0 - kDomainRelTol) || D > nm * (1.0 + kDomainRelTol))
    throw std::domain_error("opt_rho_eff: D outside [D_min, N*M]");
  const double budget = config.rho * config.T + m;
  const double num = (nm - D) * (D * budget - nm * m);
  const double den = D * (D * budget + nm * (config.T - 2.0 * m));
  return std::max(0.0, num / den);
}

OptimalDomain opt_domain(const SystemConfig& config) {
  if (!config.has_data_phase()) throw std::invalid_argument("opt_domain: requires T > M");
  const double m = static_cast<double>(config.M);
  const double nm = config.prior_variance();
  OptimalDomain dom;
  dom.D_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);
  const double grown = config.T * (1.0 + config.rho);
  dom.D_star =
      nm * m / grown * (1.0 + std::sqrt((grown - m) * (config.T - m) / (m * (config.rho * config.T + m))));
  return dom;
}

double eq_T_tau_of_D(const SystemConfig& config, double D) {
  const double nm = config.prior_variance();
  const double m = static_cast<double>(config.M);
  const double d_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);
  const double d_max = nm / (1.0 + config.rho);
  if (D < d_min * (1.0 - kDomainRelTol) || D > d_max * (1.0 + kDomainRelTol))
    throw std::domain_error("eq_T_tau_of_D: D outside the equal-power feasible interval");
  const double T_tau = m * (nm - D) / (config.rho * D);
  return std::clamp(T_tau, m, config.T);
}

double eq_rho_eff(const SystemConfig& config, double D) {
  const double nm = config.prior_variance();
  const double d_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);
  const double d_max = nm / (1.0 + config.rho);
  if (D < d_min * (1.0 - kDomainRelTol) || D > d_max * (1.0 + kDomainRelTol))
    throw std::domain_error("eq_rho_eff: D outside the equal-power feasible interval");
  return distortion_to_effective_snr(config.rho, D, config.N, config.M);
}

EqualDomain eq_domain(const SystemConfig& config, const mc::McConfig& mc, mc::Exec exec) {
  EqualDomain dom;
  dom.D_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);
  dom.D_max = config.prior_variance() / (1.0 + config.rho);
  dom.T_tau_star = detail::equal_power_T_tau_star(config, mc, exec);
  dom.D_star = mse_pilot_optimal(config.N, config.M, config.rho, dom.T_tau_star);
  return dom;
}

}  // namespace isac::ps
