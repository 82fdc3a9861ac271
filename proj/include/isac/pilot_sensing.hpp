#pragma once

#include "isac/core.hpp"
#include "isac/montecarlo.hpp"

namespace isac::ps {

/// Effective distortion domain under optimal power allocation. Beyond
/// D_star the distortion constraint goes inactive and the rate only drops.
struct OptimalDomain {
  double D_min = 0.0;
  double D_star = 0.0;
};

/// Feasible and effective distortion domain under equal power. D_star is
/// located numerically (the rate objective has no closed-form maximizer).
struct EqualDomain {
  double D_min = 0.0;
  double D_max = 0.0;
  double D_star = 0.0;
  double T_tau_star = 0.0;
};

/// Minimum sensing MSE of orthogonal equal-power pilots:
/// N*M / (1 + rho_tau*T_tau/M).
double mse_pilot_optimal(int N, int M, double rho_tau, double T_tau);

/// The allocation a distortion target D pins down under optimal power:
/// T_tau = M, rho_tau = (NM - D)/D, and rho_d takes the rest of the budget.
ResourceSplit opt_power_split(const SystemConfig& config, double D);

/// Effective SNR as a function of D under optimal power (closed form;
/// identical to effective_snr() applied to opt_power_split()).
double opt_rho_eff(const SystemConfig& config, double D);

OptimalDomain opt_domain(const SystemConfig& config);

/// Pilot duration that meets distortion D under equal power:
/// T_tau = M*(NM - D)/(rho*D).
double eq_T_tau_of_D(const SystemConfig& config, double D);

/// Effective SNR at distortion D under equal power: rho*(NM-D)/(NM+rho*D).
double eq_rho_eff(const SystemConfig& config, double D);

/// Locates D_star by a golden-section search of the equal-power rate over
/// T_tau in [M, T]. All rate evaluations share mc.seed (common random
/// numbers), so the searched objective is deterministic and concave.
EqualDomain eq_domain(const SystemConfig& config, const mc::McConfig& mc,
                      mc::Exec exec = mc::Exec::OpenMp);

}  // namespace isac::ps
