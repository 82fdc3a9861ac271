#pragma once

#include "isac/core.hpp"
#include "isac/montecarlo.hpp"

namespace isac::frontier {

/// One curve request. The distortion grid is geometric in (D - D_min + eps)
/// because the rate curvature concentrates near D_min. Per-point Monte
/// Carlo sub-seeds derive from mc.seed and the point index, so the whole
/// curve is a pure function of this request.
struct CurveRequest {
  SystemConfig config;
  SchemeSpec scheme;
  int grid_points = 20;
  mc::McConfig mc;
  /// Extend the grid past D_star to the scheme's D_max; those points carry
  /// operational = false (the distortion constraint is inactive there).
  bool include_inactive = false;
  mc::Exec exec = mc::Exec::OpenMp;
};

/// Rate at an explicit split: effective_snr composed with the ergodic-rate
/// estimator at time fraction (T - T_tau)/T.
mc::McEstimate rate_at_split(const SystemConfig& config, const ResourceSplit& split,
                             const mc::McConfig& mc, mc::Exec exec = mc::Exec::OpenMp);

/// Allocation pinned down by a distortion target under the given scheme
/// (closed form for all four scheme/policy combinations).
ResourceSplit split_of_distortion(const SystemConfig& config, const SchemeSpec& scheme, double D);

RdCurve rd_curve(const CurveRequest& request);

}  // namespace isac::frontier
