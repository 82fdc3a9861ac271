#pragma once

#include "isac/core.hpp"
#include "isac/montecarlo.hpp"
#include "isac/optimize.hpp"

namespace isac::detail {

/// Rate under equal power at pilot duration T_tau, with all Monte Carlo
/// draws tied to mc.seed so the search sees a deterministic objective.
inline double equal_power_rate(const SystemConfig& config, double T_tau, const mc::McConfig& mc,
                               mc::Exec exec) {
  const double rho_eff = effective_snr(config.rho, config.rho, T_tau, config.M);
  const double fraction = (config.T - T_tau) / config.T;
  return mc::ergodic_rate(rho_eff, config.M, config.N, fraction, mc, exec).mean;
}

/// Maximizing pilot duration of the equal-power rate; shared by the PS and
/// DAS schemes (their equal-power rate objectives coincide, only the
/// distortion map differs). Bracket tolerance 1e-4*(T - M): the objective
/// is flat near the optimum, tighter brackets buy nothing.
inline double equal_power_T_tau_star(const SystemConfig& config, const mc::McConfig& mc,
                                     mc::Exec exec) {
  if (!config.has_data_phase())
    throw std::invalid_argument("equal-power search: config needs T > M");
  const double lo = static_cast<double>(config.M);
  const double hi = config.T;
  const double tol = 1e-4 * (hi - lo);
  return opt::golden_section_max(
      [&](double T_tau) { return equal_power_rate(config, T_tau, mc, exec); }, lo, hi, tol);
}

}  // namespace isac::detail
