#include "isac/das_sensing.hpp"

#include <algorithm>
#include <cmath>

#include "equal_power_search.hpp"

namespace isac::das {

namespace {
constexpr double kDomainRelTol = 1e-9;
}

RmtParams RmtParams::make(double c, double rho_d, double gamma) {
  if (!(c >= 1.0)) throw std::domain_error("RmtParams: c must be >= 1");
  if (!(rho_d >= 0.0)) throw std::domain_error("RmtParams: rho_d must be >= 0");
  if (!(gamma > 0.0)) throw std::domain_error("RmtParams: gamma must be positive");
  RmtParams p;
  p.c = c;
  p.rho_d = rho_d;
  p.gamma = gamma;
  p.b = c + rho_d / gamma - rho_d;
  return p;
}

double jensen_lower_bound(int N, int M, double T, double rho) {
  return min_sensing_distortion(N, M, T, rho);
}

double jensen_bound_matched(int N, int M, double c, double rho_d, double T_d) {
  const double m = static_cast<double>(M);
  return static_cast<double>(N) * m * m / (m * c + rho_d * T_d);
}

double rmt_mse(int N, int M, double c, double rho_d, double T_d) {
  if (!(c >= 1.0)) throw std::domain_error("rmt_mse: c must be >= 1");
  if (!(T_d > 0.0)) throw std::domain_error("rmt_mse: T_d must be positive");
  if (!(rho_d >= 0.0)) throw std::domain_error("rmt_mse: rho_d must be >= 0");
  const double nm = static_cast<double>(N) * static_cast<double>(M);
  if (rho_d == 0.0) return nm / c;  // pilot-only limit of the fixed point
  const double b = c + rho_d * T_d / static_cast<double>(M) - rho_d;
  const double root = std::sqrt(b * b + 4.0 * c * rho_d);
  // Positive quadratic root; pick the expression without cancellation.
  if (b >= 0.0) return 2.0 * nm / (root + b);
  return nm * (root - b) / (2.0 * c * rho_d);
}

double stieltjes_residual(double x, double c, double rho_d, double gamma) {
  const double b = c + rho_d / gamma - rho_d;
  return c * rho_d * x * x + b * x - 1.0;
}

double max_data_snr(const SystemConfig& config) {
  if (!config.has_data_phase()) throw std::invalid_argument("max_data_snr: requires T > M");
  return config.rho * config.T / (config.T - static_cast<double>(config.M));
}

double opt_rho_tau_of_rho_d(const SystemConfig& config, double rho_d) {
  const double m = static_cast<double>(config.M);
  return (config.rho * config.T - rho_d * (config.T - m)) / m;
}

double opt_rho_d_of_D(const SystemConfig& config, double D) {
  if (!config.has_data_phase()) throw std::invalid_argument("opt_rho_d_of_D: requires T > M");
  const double m = static_cast<double>(config.M);
  const double nm = config.prior_variance();
  const double d_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);
  if (D < d_min * (1.0 - kDomainRelTol))
    throw std::domain_error("opt_rho_d_of_D: D below the minimum feasible distortion");
  if (!(D > 0.0) || D > nm)
    throw std::domain_error("opt_rho_d_of_D: D must lie in [D_min, N*M)");

  const double u = 1.0 + config.rho * config.T / m;
  const double kappa = nm / D;
  const double gap = std::max(0.0, u - kappa);  // clamp rounding at D = D_min
  const double ratio = (config.T - m) / m;
  const double rho_d = (gap + std::sqrt(gap * gap + 4.0 * ratio * kappa * gap)) / (2.0 * ratio);
  const double cap = max_data_snr(config);
  if (rho_d > cap * (1.0 + kDomainRelTol))
    throw std::domain_error("opt_rho_d_of_D: D implies negative pilot power");
  return std::min(rho_d, cap);
}

double opt_rho_eff(const SystemConfig& config, double D) {
  const double rho_d = opt_rho_d_of_D(config, D);
  const double rho_tau = std::max(0.0, opt_rho_tau_of_rho_d(config, rho_d));
  return effective_snr(rho_tau, rho_d, static_cast<double>(config.M), config.M);
}

OptimalDomain opt_domain(const SystemConfig& config) {
  if (!config.has_data_phase()) throw std::invalid_argument("opt_domain: requires T > M");
  const double m = static_cast<double>(config.M);
  OptimalDomain dom;
  dom.D_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);

  // Unique stationary point of rho_eff over the budget line. Written as
  // A*P/(C*(A + sqrt(A^2 + A*B*P/C))) rather than (-A + sqrt(...))/B: the
  // two are algebraically identical for B != 0, and this form stays finite
  // and correct through the degenerate case T = 2M (B = 0).
  const double P = config.rho * config.T;
  const double A = m + P;
  const double B = 2.0 * m - config.T;
  const double C = config.T - m;
  const double rad = A * A + A * B * P / C;
  dom.rho_d_star = A * P / (C * (A + std::sqrt(rad)));

  const double rho_tau_star = std::max(0.0, opt_rho_tau_of_rho_d(config, dom.rho_d_star));
  dom.D_star = rmt_mse(config.N, config.M, 1.0 + rho_tau_star, dom.rho_d_star, config.T - m);
  return dom;
}

double eq_mse_of_T_tau(const SystemConfig& config, double T_tau) {
  const double m = static_cast<double>(config.M);
  if (!(T_tau >= m) || T_tau > config.T)
    throw std::domain_error("eq_mse_of_T_tau: T_tau must lie in [M, T]");
  if (T_tau == config.T) return min_sensing_distortion(config.N, config.M, config.T, config.rho);
  const double c = 1.0 + config.rho * T_tau / m;
  return rmt_mse(config.N, config.M, c, config.rho, config.T - T_tau);
}

double eq_T_tau_of_D(const SystemConfig& config, double D) {
  if (!config.has_data_phase()) throw std::invalid_argument("eq_T_tau_of_D: requires T > M");
  const double m = static_cast<double>(config.M);
  const double nm = config.prior_variance();
  const double d_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);
  const double d_max = eq_mse_of_T_tau(config, m);
  if (D < d_min * (1.0 - kDomainRelTol) || D > d_max * (1.0 + kDomainRelTol))
    throw std::domain_error("eq_T_tau_of_D: D outside the equal-power feasible interval");
  const double b = 1.0 + config.rho * config.T / m - config.rho;
  const double kappa = nm / D;
  const double T_tau = m / config.rho * (kappa * (kappa - b) / config.rho - 1.0);
  return std::clamp(T_tau, m, config.T);
}

EqualDomain eq_domain(const SystemConfig& config, const mc::McConfig& mc, mc::Exec exec) {
  EqualDomain dom;
  dom.D_min = min_sensing_distortion(config.N, config.M, config.T, config.rho);
  dom.T_tau_star = detail::equal_power_T_tau_star(config, mc, exec);
  dom.D_star = eq_mse_of_T_tau(config, dom.T_tau_star);
  return dom;
}

}  // namespace isac::das
