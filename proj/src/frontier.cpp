#include "isac/frontier.hpp"

#include <algorithm>
#include <cmath>

#include "isac/das_sensing.hpp"
#include "isac/pilot_sensing.hpp"

namespace isac::frontier {

namespace {

struct Domain {
  double D_min = 0.0;
  double D_star = 0.0;
  double D_max = 0.0;
};

Domain scheme_domain(const SystemConfig& config, const SchemeSpec& scheme, const mc::McConfig& mc,
                     mc::Exec exec) {
  Domain dom;
  if (scheme.sensing == Sensing::PS && scheme.power == Power::Optimal) {
    const auto d = ps::opt_domain(config);
    dom = {d.D_min, d.D_star, config.prior_variance()};
  } else if (scheme.sensing == Sensing::PS && scheme.power == Power::Equal) {
    const auto d = ps::eq_domain(config, mc, exec);
    dom = {d.D_min, d.D_star, d.D_max};
  } else if (scheme.sensing == Sensing::DAS && scheme.power == Power::Optimal) {
    const auto d = das::opt_domain(config);
    // rho_tau = 0 caps the feasible distortion under optimal power.
    const double d_cap =
        das::rmt_mse(config.N, config.M, 1.0, das::max_data_snr(config), config.T - config.M);
    dom = {d.D_min, d.D_star, d_cap};
  } else {
    const auto d = das::eq_domain(config, mc, exec);
    dom = {d.D_min, d.D_star, das::eq_mse_of_T_tau(config, static_cast<double>(config.M))};
  }
  return dom;
}

}  // namespace

mc::McEstimate rate_at_split(const SystemConfig& config, const ResourceSplit& split,
                             const mc::McConfig& mc, mc::Exec exec) {
  if (!validate_split(config, split))
    throw std::invalid_argument("rate_at_split: split violates the resource constraints");
  const double rho_eff = effective_snr(split.rho_tau, split.rho_d, split.T_tau, config.M);
  const double fraction = (config.T - split.T_tau) / config.T;
  return mc::ergodic_rate(rho_eff, config.M, config.N, fraction, mc, exec);
}

ResourceSplit split_of_distortion(const SystemConfig& config, const SchemeSpec& scheme, double D) {
  ResourceSplit split;
  if (scheme.sensing == Sensing::PS && scheme.power == Power::Optimal) {
    split = ps::opt_power_split(config, D);
  } else if (scheme.sensing == Sensing::PS && scheme.power == Power::Equal) {
    split = {ps::eq_T_tau_of_D(config, D), config.rho, config.rho};
  } else if (scheme.sensing == Sensing::DAS && scheme.power == Power::Optimal) {
    const double rho_d = das::opt_rho_d_of_D(config, D);
    const double rho_tau = std::max(0.0, das::opt_rho_tau_of_rho_d(config, rho_d));
    split = {static_cast<double>(config.M), rho_tau, rho_d};
  } else {
    split = {das::eq_T_tau_of_D(config, D), config.rho, config.rho};
  }
  return split;
}

RdCurve rd_curve(const CurveRequest& request) {
  const SystemConfig& config = request.config;
  if (!config.has_data_phase()) throw std::invalid_argument("rd_curve: requires T > M");
  if (request.grid_points < 2) throw std::invalid_argument("rd_curve: grid_points must be >= 2");

  const Domain dom = scheme_domain(config, request.scheme, request.mc, request.exec);
  const double d_hi = request.include_inactive ? dom.D_max : dom.D_star;
  const int n = request.grid_points;

  // Geometric spacing in (D - D_min + eps); endpoints pinned exactly.
  const double eps = 1e-6 * config.prior_variance();
  const double lo = eps;
  const double hi = d_hi - dom.D_min + eps;
  const double ratio = hi / lo;

  RdCurve curve{config, request.scheme, {}, dom.D_min, dom.D_star};
  curve.points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double D;
    if (i == 0) {
      D = dom.D_min;
    } else if (i == n - 1) {
      D = d_hi;
    } else {
      D = dom.D_min + lo * std::pow(ratio, static_cast<double>(i) / (n - 1)) - eps;
    }
    RdPoint point;
    point.D = D;
    point.split = split_of_distortion(config, request.scheme, D);
    point.rho_eff = effective_snr(point.split.rho_tau, point.split.rho_d, point.split.T_tau, config.M);
    point.operational = D <= dom.D_star * (1.0 + 1e-12);

    mc::McConfig point_mc = request.mc;
    point_mc.seed = mc::derive_stream(request.mc.seed, static_cast<std::uint64_t>(i));
    const double fraction = (config.T - point.split.T_tau) / config.T;
    const auto rate = mc::ergodic_rate(point.rho_eff, config.M, config.N, fraction, point_mc,
                                       request.exec);
    point.R = rate.mean;
    point.R_std_err = rate.std_err;
    curve.points.push_back(point);
  }
  return curve;
}

}  // namespace isac::frontier
