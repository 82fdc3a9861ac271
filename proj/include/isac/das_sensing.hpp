#pragma once

#include "isac/core.hpp"
#include "isac/montecarlo.hpp"

namespace isac::das {

/// Parameters of the large-dimension sensing-MSE fixed point: pilot prior
/// gain c = 1 + rho_tau*T_tau/M, data SNR, aspect ratio gamma = M/T_d, and
/// the derived linear coefficient b = c + rho_d/gamma - rho_d.
struct RmtParams {
  double c = 1.0;
  double rho_d = 0.0;
  double gamma = 1.0;
  double b = 1.0;

  static RmtParams make(double c, double rho_d, double gamma);
};

struct OptimalDomain {
  double D_min = 0.0;
  double D_star = 0.0;
  double rho_d_star = 0.0;
};

struct EqualDomain {
  double D_min = 0.0;
  double D_star = 0.0;
  double T_tau_star = 0.0;
};

/// Energy-budget lower bound on the data-aided sensing MSE:
/// N*M^2/(M + rho*T). Shared with the pilot scheme's minimum distortion.
double jensen_lower_bound(int N, int M, double T, double rho);

/// The same bound at explicit phase parameters: N*M^2/(M*c + rho_d*T_d).
double jensen_bound_matched(int N, int M, double c, double rho_d, double T_d);

/// Large-dimension sensing MSE of data-aided estimation,
/// (NM/(2 c rho_d)) * (sqrt(b^2 + 4 c rho_d) - b) with
/// b = c + rho_d*T_d/M - rho_d, evaluated in a cancellation-free form.
/// rho_d = 0 returns the pilot-only limit N*M/c.
double rmt_mse(int N, int M, double c, double rho_d, double T_d);

/// c*rho_d*x^2 + b*x - 1: the fixed-point polynomial of the normalized
/// resolvent trace. Vanishes at x = rmt_mse(...)/(N*M).
double stieltjes_residual(double x, double c, double rho_d, double gamma);

/// Largest data SNR with nonnegative pilot power: rho*T/(T - M).
double max_data_snr(const SystemConfig& config);

/// Pilot SNR implied by rho_d when the budget is spent with equality and
/// T_tau = M: (rho*T - rho_d*(T - M))/M.
double opt_rho_tau_of_rho_d(const SystemConfig& config, double rho_d);

/// Data SNR pinned down by a distortion target D under optimal power
/// (positive root of the inverted fixed point).
double opt_rho_d_of_D(const SystemConfig& config, double D);

/// Effective SNR at distortion D under optimal power, via the closed-form
/// allocation map.
double opt_rho_eff(const SystemConfig& config, double D);

OptimalDomain opt_domain(const SystemConfig& config);

/// Sensing MSE at pilot duration T_tau under equal power,
/// 2NM/(sqrt(b^2 + 4 rho c) + b) with c = 1 + rho*T_tau/M.
double eq_mse_of_T_tau(const SystemConfig& config, double T_tau);

/// Inverse of eq_mse_of_T_tau: T_tau = (M/rho)*(kappa*(kappa - b)/rho - 1)
/// with kappa = NM/D.
double eq_T_tau_of_D(const SystemConfig& config, double D);

/// Equal-power domain; T_tau_star from the shared concave rate search,
/// D_star = eq_mse_of_T_tau(T_tau_star).
EqualDomain eq_domain(const SystemConfig& config, const mc::McConfig& mc,
                      mc::Exec exec = mc::Exec::OpenMp);

}  // namespace isac::das
