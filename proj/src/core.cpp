#include "isac/core.hpp"

#include <cmath>

namespace isac {

std::string to_string(const SchemeSpec& scheme) {
  std::string name = scheme.sensing == Sensing::PS ? "ps" : "das";
  name += scheme.power == Power::Optimal ? "-opt" : "-eq";
  return name;
}

SchemeSpec scheme_from_string(const std::string& name) {
  if (name == "ps-opt") return {Sensing::PS, Power::Optimal};
  if (name == "ps-eq") return {Sensing::PS, Power::Equal};
  if (name == "das-opt") return {Sensing::DAS, Power::Optimal};
  if (name == "das-eq") return {Sensing::DAS, Power::Equal};
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected ps-opt, ps-eq, das-opt or das-eq)");
}

bool validate_split(const SystemConfig& config, const ResourceSplit& split) {
  if (!(split.T_tau >= static_cast<double>(config.M))) return false;
  if (!(split.T_tau <= config.T)) return false;
  if (!(split.rho_tau >= 0.0) || !(split.rho_d >= 0.0)) return false;
  const double spent = split.rho_tau * split.T_tau + split.rho_d * (config.T - split.T_tau);
  const double budget = config.rho * config.T;
  return spent <= budget * (1.0 + kEnergyRelTol);
}

double effective_snr(double rho_tau, double rho_d, double T_tau, int M) {
  const double pilot_gain = rho_tau * T_tau / static_cast<double>(M);
  return rho_d * pilot_gain / (1.0 + rho_d + pilot_gain);
}

double distortion_to_effective_snr(double rho_d, double D, int N, int M) {
  const double nm = static_cast<double>(N) * static_cast<double>(M);
  if (!(D > 0.0) || D > nm)
    throw std::domain_error("distortion_to_effective_snr: D must lie in (0, N*M]");
  return rho_d * (nm - D) / (nm + rho_d * D);
}

double min_sensing_distortion(int N, int M, double T, double rho) {
  const double m = static_cast<double>(M);
  return static_cast<double>(N) * m * m / (m + rho * T);
}

}  // namespace isac
