#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace isac::mc {

/// Trial budget and seeding for one Monte Carlo estimate. `batch` is the
/// scheduling chunk handed to each worker; it never changes the result.
struct McConfig {
  long trials = 3000;
  std::uint64_t seed = 0x15acd06;
  int batch = 64;
};

/// A Monte Carlo mean with its standard error (sample sd / sqrt(trials)).
struct McEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
};

/// Serial is the plain reference loop; OpenMp runs the same per-trial
/// kernels across threads. Both produce bit-identical estimates.
enum class Exec { Serial, OpenMp };

/// Worker count for OpenMp execution: ISAC_THREADS when set to a positive
/// value, otherwise the OpenMP default (ISAC_THREADS=0 also means auto).
int worker_threads();

/// Stream seed for sub-stream `index` of a master seed (SplitMix64
/// finalizer). Used for per-trial streams and per-curve-point sub-seeds.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

/**
 * @brief Per-trial random stream (SplitMix64 state, Box-Muller normals).
 *
 * Every trial owns its own stream derived from (seed, trial index), so
 * estimates do not depend on thread count or scheduling.
 */
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t stream_seed) : state_(stream_seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_normal();

  /// CN(0,1): real and imaginary parts independent with variance 1/2.
  std::complex<double> next_cgauss();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// rows x cols matrix of i.i.d. CN(0,1) entries, filled column-major.
Eigen::MatrixXcd sample_complex_gaussian(int rows, int cols, TrialRng& rng);

/// Deterministic pairwise reduction; the summation tree depends only on
/// the element count, so results are independent of how the values were
/// produced (threads, batches).
double pairwise_sum(std::span<const double> values);

/// Mean and standard error of a per-trial value vector via pairwise sums.
McEstimate summarize(std::span<const double> values, std::uint64_t seed);

/// time_fraction * E[log2 det(I_N + (rho_eff/M) H H^H)], H i.i.d. CN(0,1).
/// The log-det is factorized on the smaller Gram side (N x N or M x M).
McEstimate ergodic_rate(double rho_eff, int M, int N, double time_fraction, const McConfig& mc,
                        Exec exec = Exec::OpenMp);

/// N * E[Tr((c I_M + (rho_d/M) G G^H)^{-1})] over i.i.d. CN(0,1) G of size
/// M x T_d. This is the sensing MSE when the data payload joins the pilots.
McEstimate empirical_das_mse(int N, int M, double c, double rho_d, int T_d, const McConfig& mc,
                             Exec exec = Exec::OpenMp);

/// Signal-level pilot-only check: per trial draw H and noise, transmit
/// orthogonal pilots (scaled truncated DFT rows), form the LMMSE estimate
/// and accumulate ||H - Hhat||_F^2.
McEstimate empirical_lmmse_mse(int N, int M, double rho_tau, int T_tau, const McConfig& mc,
                               Exec exec = Exec::OpenMp);

}  // namespace isac::mc
