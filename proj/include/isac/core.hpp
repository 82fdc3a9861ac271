#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace isac {

/// Relative slack on the per-block energy budget. Splits are produced
/// analytically, so this only has to absorb floating-point error.
inline constexpr double kEnergyRelTol = 1e-9;

/**
 * @brief Link geometry and the per-block resource budget.
 *
 * M transmit antennas, N receive antennas, a coherence block of T symbols
 * and a total SNR budget rho (linear scale). T = M is accepted so that
 * pure-sensing endpoints can be evaluated; everything that needs a data
 * phase requires T > M and says so.
 */
struct SystemConfig {
  int M;
  int N;
  double T;
  double rho;

  SystemConfig(int M_, int N_, double T_, double rho_) : M(M_), N(N_), T(T_), rho(rho_) {
    if (M < 1 || N < 1) throw std::invalid_argument("SystemConfig: antenna counts must be >= 1");
    if (!(rho > 0.0)) throw std::invalid_argument("SystemConfig: rho must be positive");
    if (!(T >= static_cast<double>(M)))
      throw std::invalid_argument("SystemConfig: coherence length T must be >= M");
  }

  /// Total prior variance of the channel matrix, N*M.
  double prior_variance() const { return static_cast<double>(N) * static_cast<double>(M); }

  /// True when a data phase exists.
  bool has_data_phase() const { return T > static_cast<double>(M); }
};

/// One feasible split of a coherence block: pilot duration and the two
/// phase SNRs (all linear scale).
struct ResourceSplit {
  double T_tau = 0.0;
  double rho_tau = 0.0;
  double rho_d = 0.0;
};

enum class Sensing { PS, DAS };
enum class Power { Optimal, Equal };

/// Which sensing scheme and which power policy a curve is computed for.
struct SchemeSpec {
  Sensing sensing = Sensing::PS;
  Power power = Power::Optimal;
};

std::string to_string(const SchemeSpec& scheme);
SchemeSpec scheme_from_string(const std::string& name);

/// One point of a rate-distortion frontier. D is the sensing MSE in
/// absolute units (normalization by N*M happens only at the IO layer).
struct RdPoint {
  double D = 0.0;
  double R = 0.0;
  double R_std_err = 0.0;
  ResourceSplit split;
  double rho_eff = 0.0;
  bool operational = true;  // false on the extended branch beyond D_star
};

struct RdCurve {
  SystemConfig config;
  SchemeSpec scheme;
  std::vector<RdPoint> points;
  double D_min = 0.0;
  double D_star = 0.0;
};

/// Checks T_tau >= M, nonnegative powers, and the energy budget
/// rho_tau*T_tau + rho_d*(T - T_tau) <= rho*T within kEnergyRelTol.
bool validate_split(const SystemConfig& config, const ResourceSplit& split);

/// Post-estimation effective SNR of the data phase:
///   rho_d * (rho_tau*T_tau/M) / (1 + rho_d + rho_tau*T_tau/M).
double effective_snr(double rho_tau, double rho_d, double T_tau, int M);

/// Maps a sensing distortion D in (0, N*M] to the effective SNR a receiver
/// with that estimate quality sees: rho_d*(NM - D)/(NM + rho_d*D).
double distortion_to_effective_snr(double rho_d, double D, int N, int M);

/// Smallest sensing MSE reachable under the block energy budget,
/// N*M^2/(M + rho*T). Every scheme shares this left endpoint; all of them
/// call this one function so the values are bitwise identical.
double min_sensing_distortion(int N, int M, double T, double rho);

}  // namespace isac
