#include "isac/montecarlo.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isac::mc {

namespace {

constexpr double kLog2e = 1.4426950408889634;  // 1/ln(2)

template <class Kernel>
std::vector<double> trial_values(long trials, int batch, Exec exec, Kernel&& kernel) {
  std::vector<double> values(static_cast<std::size_t>(trials));
  if (exec == Exec::Serial) {
    for (long t = 0; t < trials; ++t) values[static_cast<std::size_t>(t)] = kernel(t);
    return values;
  }
#ifdef _OPENMP
  const int threads = worker_threads();
  const int chunk = batch > 0 ? batch : 64;
#pragma omp parallel for schedule(static, chunk) num_threads(threads)
  for (long t = 0; t < trials; ++t) values[static_cast<std::size_t>(t)] = kernel(t);
#else
  (void)batch;
  for (long t = 0; t < trials; ++t) values[static_cast<std::size_t>(t)] = kernel(t);
#endif
  return values;
}

void check_mc(const McConfig& mc) {
  if (mc.trials < 1) throw std::invalid_argument("McConfig: trials must be >= 1");
  if (mc.batch < 1 || mc.batch > mc.trials)
    throw std::invalid_argument("McConfig: batch must be in [1, trials]");
}

/// log2 det(I_k + s * A A^H) with A of size k x l, via Cholesky of the
/// Hermitian positive definite Gram matrix.
double log2_det_gram(const Eigen::MatrixXcd& A, double s) {
  const Eigen::Index k = A.rows();
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(k, k);
  gram.noalias() += s * (A * A.adjoint());
  const Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("ergodic_rate: Cholesky factorization failed");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) acc += std::log(llt.matrixLLT()(i, i).real());
  return 2.0 * kLog2e * acc;
}

}  // namespace

int worker_threads() {
#ifdef _OPENMP
  int max_threads = omp_get_max_threads();
  if (const char* env = std::getenv("ISAC_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0 && cap < max_threads) return static_cast<int>(cap);
  }
  return max_threads;
#else
  return 1;
#endif
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double TrialRng::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::complex<double> TrialRng::next_cgauss() {
  const double u1 = next_double();
  const double u2 = next_double();
  const double m = std::sqrt(-std::log(1.0 - u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {m * std::cos(theta), m * std::sin(theta)};
}

Eigen::MatrixXcd sample_complex_gaussian(int rows, int cols, TrialRng& rng) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("sample_complex_gaussian: dimensions must be >= 1");
  Eigen::MatrixXcd out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = rng.next_cgauss();
  return out;
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

McEstimate summarize(std::span<const double> values, std::uint64_t seed) {
  const long n = static_cast<long>(values.size());
  McEstimate est;
  est.trials = n;
  est.seed = seed;
  est.mean = pairwise_sum(values) / static_cast<double>(n);
  if (n > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double d = values[i] - est.mean;
      sq[i] = d * d;
    }
    const double ssq = pairwise_sum(sq);
    est.std_err = std::sqrt(ssq / static_cast<double>(n - 1) / static_cast<double>(n));
  }
  return est;
}

McEstimate ergodic_rate(double rho_eff, int M, int N, double time_fraction, const McConfig& mc,
                        Exec exec) {
  check_mc(mc);
  if (!(rho_eff >= 0.0)) throw std::invalid_argument("ergodic_rate: rho_eff must be >= 0");
  if (!(time_fraction >= 0.0 && time_fraction <= 1.0))
    throw std::invalid_argument("ergodic_rate: time_fraction must be in [0, 1]");
  const double s = rho_eff / static_cast<double>(M);
  const std::uint64_t seed = mc.seed;
  const auto values = trial_values(mc.trials, mc.batch, exec, [&](long t) -> double {
    if (rho_eff == 0.0 || time_fraction == 0.0) return 0.0;
    TrialRng rng(derive_stream(seed, static_cast<std::uint64_t>(t)));
    const Eigen::MatrixXcd H = sample_complex_gaussian(N, M, rng);
    // Sylvester: det(I_N + s H H^H) = det(I_M + s H^H H); factor the smaller side.
    const double ld = (N <= M) ? log2_det_gram(H, s) : log2_det_gram(H.adjoint().eval(), s);
    return time_fraction * ld;
  });
  return summarize(values, seed);
}

McEstimate empirical_das_mse(int N, int M, double c, double rho_d, int T_d, const McConfig& mc,
                             Exec exec) {
  check_mc(mc);
  if (!(c >= 1.0)) throw std::invalid_argument("empirical_das_mse: c must be >= 1");
  if (T_d < 1) throw std::invalid_argument("empirical_das_mse: T_d must be >= 1");
  if (!(rho_d >= 0.0)) throw std::invalid_argument("empirical_das_mse: rho_d must be >= 0");
  const std::uint64_t seed = mc.seed;
  const double scale = rho_d / static_cast<double>(M);
  const auto values = trial_values(mc.trials, mc.batch, exec, [&](long t) -> double {
    if (rho_d == 0.0) return static_cast<double>(N) * static_cast<double>(M) / c;
    TrialRng rng(derive_stream(seed, static_cast<std::uint64_t>(t)));
    const Eigen::MatrixXcd G = sample_complex_gaussian(M, T_d, rng);
    Eigen::MatrixXcd A = c * Eigen::MatrixXcd::Identity(M, M);
    A.noalias() += scale * (G * G.adjoint());
    const double tr = A.llt().solve(Eigen::MatrixXcd::Identity(M, M)).trace().real();
    return static_cast<double>(N) * tr;
  });
  return summarize(values, seed);
}

McEstimate empirical_lmmse_mse(int N, int M, double rho_tau, int T_tau, const McConfig& mc,
                               Exec exec) {
  check_mc(mc);
  if (T_tau < M) throw std::domain_error("empirical_lmmse_mse: T_tau must be >= M");
  if (!(rho_tau >= 0.0)) throw std::invalid_argument("empirical_lmmse_mse: rho_tau must be >= 0");

  // Orthogonal pilots with equal per-antenna power: the first M rows of a
  // T_tau-point DFT matrix, scaled so X X^H = (rho_tau * T_tau / M) I.
  Eigen::MatrixXcd pilots(M, T_tau);
  const double amp = std::sqrt(rho_tau / static_cast<double>(M));
  for (int k = 0; k < M; ++k)
    for (int t = 0; t < T_tau; ++t) {
      const double phase = -2.0 * std::numbers::pi * k * t / static_cast<double>(T_tau);
      pilots(k, t) = amp * std::complex<double>(std::cos(phase), std::sin(phase));
    }
  // LMMSE estimate is Y * X^H (I_M + X X^H)^{-1}; the projector is constant
  // across trials.
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(M, M);
  gram.noalias() += pilots * pilots.adjoint();
  const Eigen::MatrixXcd projector = gram.llt().solve(pilots).adjoint();  // T_tau x M

  const std::uint64_t seed = mc.seed;
  const auto values = trial_values(mc.trials, mc.batch, exec, [&](long t) -> double {
    TrialRng rng(derive_stream(seed, static_cast<std::uint64_t>(t)));
    const Eigen::MatrixXcd H = sample_complex_gaussian(N, M, rng);
    const Eigen::MatrixXcd Z = sample_complex_gaussian(N, T_tau, rng);
    Eigen::MatrixXcd Y = H * pilots;
    Y += Z;
    const Eigen::MatrixXcd Hhat = Y * projector;
    return (H - Hhat).squaredNorm();
  });
  return summarize(values, seed);
}

}  // namespace isac::mc
