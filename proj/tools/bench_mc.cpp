// Compares the serial reference loops against the OpenMP kernels and checks
// that both produce identical estimates. ISAC_THREADS caps the worker count.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "isac/montecarlo.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <class Fn>
double time_ms(Fn&& fn) {
  const auto start = clock_type::now();
  fn();
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-24s serial %9.2f ms  openmp %9.2f ms  speedup %5.2fx  identical %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace isac;
  long trials = 20000;
  if (argc > 1) trials = std::strtol(argv[1], nullptr, 10);
  const mc::McConfig cfg{trials, 99, 64};
  std::printf("trials %ld, workers %d\n", trials, mc::worker_threads());

  {
    mc::McEstimate s, p;
    const double ts = time_ms([&] { s = mc::ergodic_rate(3.0, 12, 12, 0.6, cfg, mc::Exec::Serial); });
    const double tp = time_ms([&] { p = mc::ergodic_rate(3.0, 12, 12, 0.6, cfg, mc::Exec::OpenMp); });
    report("ergodic_rate 12x12", ts, tp, s.mean == p.mean && s.std_err == p.std_err);
  }
  {
    mc::McEstimate s, p;
    const double ts =
        time_ms([&] { s = mc::empirical_das_mse(16, 16, 2.0, 1.0, 64, cfg, mc::Exec::Serial); });
    const double tp =
        time_ms([&] { p = mc::empirical_das_mse(16, 16, 2.0, 1.0, 64, cfg, mc::Exec::OpenMp); });
    report("empirical_das_mse 16", ts, tp, s.mean == p.mean && s.std_err == p.std_err);
  }
  {
    mc::McEstimate s, p;
    const double ts =
        time_ms([&] { s = mc::empirical_lmmse_mse(12, 12, 2.0, 12, cfg, mc::Exec::Serial); });
    const double tp =
        time_ms([&] { p = mc::empirical_lmmse_mse(12, 12, 2.0, 12, cfg, mc::Exec::OpenMp); });
    report("empirical_lmmse_mse", ts, tp, s.mean == p.mean && s.std_err == p.std_err);
  }
  return 0;
}
