#include "isac/asymptotics.hpp"

#include <cmath>

#include "doctest.h"
#include "isac/das_sensing.hpp"
#include "oracles.hpp"

using namespace isac;

namespace {
const SystemConfig kPaper(12, 12, 30.0, std::sqrt(10.0));
}

TEST_CASE("low-SNR closed forms and their ratios") {
  SUBCASE("optimal power: the gain is 2 for any geometry") {
    for (double T : {18.0, 24.0, 30.0, 100.0}) {
      const SystemConfig config(12, 12, T, 1.0);
      const auto pair = asymp::low_snr_eff_snr(config, Power::Optimal, 1e-3);
      CHECK(pair.das / pair.ps == doctest::Approx(2.0).epsilon(1e-12));
      CHECK(pair.ps == doctest::Approx(T * T * 1e-6 / (4.0 * 12.0 * (T - 12.0))).epsilon(1e-12));
    }
  }
  SUBCASE("equal power: 2 for T >= 2M, T/M below") {
    const auto large = asymp::low_snr_eff_snr(SystemConfig(12, 12, 30.0, 1.0), Power::Equal, 1e-3);
    CHECK(large.das / large.ps == doctest::Approx(2.0).epsilon(1e-12));
    const auto small = asymp::low_snr_eff_snr(SystemConfig(12, 12, 18.0, 1.0), Power::Equal, 1e-3);
    CHECK(small.das / small.ps == doctest::Approx(18.0 / 12.0).epsilon(1e-12));
  }
}

TEST_CASE("high-SNR table entries") {
  const double rho = 1e4;
  // direct substitutions at K = 10
  CHECK(asymp::high_snr_eff_snr(Power::Optimal, Sensing::PS, 10.0, rho) ==
        doctest::Approx(11.0 / (11.0 + 2.0 * std::sqrt(10.0)) * rho).epsilon(1e-14));
  CHECK(asymp::high_snr_eff_snr(Power::Optimal, Sensing::PS, 10.0, rho) ==
        doctest::Approx(6349.37).epsilon(1e-5));
  CHECK(asymp::high_snr_eff_snr(Power::Optimal, Sensing::DAS, 10.0, rho) == 0.99 * rho);
  CHECK(asymp::high_snr_eff_snr(Power::Equal, Sensing::PS, 10.0, rho) == 0.5 * rho);
  CHECK(asymp::high_snr_eff_snr(Power::Equal, Sensing::PS, 3.0, rho) == 0.5 * rho);
  CHECK(asymp::high_snr_eff_snr(Power::Equal, Sensing::DAS, 10.0, rho) ==
        doctest::Approx(2.0 / (2.0 + std::sqrt(104.0) - 10.0) * rho).epsilon(1e-14));

  CHECK_THROWS_AS(asymp::high_snr_eff_snr(Power::Equal, Sensing::PS, 1.0, rho), std::domain_error);

  SUBCASE("entries stay positive and within the budget") {
    for (double K : {1.1, 1.5, 2.0, 4.0, 32.0, 1024.0})
      for (auto policy : {Power::Optimal, Power::Equal})
        for (auto sensing : {Sensing::PS, Sensing::DAS}) {
          const double v = asymp::high_snr_eff_snr(policy, sensing, K, rho);
          CHECK(v > 0.0);
          CHECK(v <= rho);
        }
  }
  SUBCASE("the data-aided optimal-power branches meet at K = 2") {
    const double left = asymp::high_snr_eff_snr(Power::Optimal, Sensing::DAS, 2.0 - 1e-13, rho);
    const double right = asymp::high_snr_eff_snr(Power::Optimal, Sensing::DAS, 2.0, rho);
    CHECK(left == doctest::Approx(right).epsilon(1e-12));
    CHECK(right == 0.75 * rho);
  }
  SUBCASE("all entries except pilot/equal approach the budget as K grows") {
    const double K = 1e9;
    CHECK(asymp::high_snr_eff_snr(Power::Optimal, Sensing::PS, K, rho) / rho ==
          doctest::Approx(1.0).epsilon(1e-3));
    CHECK(asymp::high_snr_eff_snr(Power::Optimal, Sensing::DAS, K, rho) / rho ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(asymp::high_snr_eff_snr(Power::Equal, Sensing::DAS, K, rho) / rho ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(asymp::high_snr_eff_snr(Power::Equal, Sensing::PS, K, rho) == 0.5 * rho);
  }
}

TEST_CASE("high-SNR gain ratios") {
  CHECK(asymp::high_snr_gain_ratio(Power::Equal, 2.0) ==
        doctest::Approx(4.0 / std::sqrt(8.0)).epsilon(1e-14));  // ~1.41421
  CHECK(asymp::high_snr_gain_ratio(Power::Optimal, 4.0) == doctest::Approx(27.0 / 16.0).epsilon(1e-14));
  // limits for large K: the equal-power ratio tends to 2 (the data-aided
  // side reaches the full budget, the pilot side is pinned at rho/2), the
  // optimal-power ratio tends to 1 (both sides reach the budget)
  CHECK(asymp::high_snr_gain_ratio(Power::Equal, 1e8) == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(asymp::high_snr_gain_ratio(Power::Optimal, 1e8) == doctest::Approx(1.0).epsilon(1e-3));
  for (double K : {1.01, 1.5, 2.0, 3.0, 10.0, 100.0}) {
    CHECK(asymp::high_snr_gain_ratio(Power::Optimal, K) > 1.0);
    CHECK(asymp::high_snr_gain_ratio(Power::Equal, K) > 1.0);
  }
  CHECK_THROWS_AS(asymp::high_snr_gain_ratio(Power::Optimal, 1.0), std::domain_error);

  const auto report = asymp::high_snr_report(Power::Equal, 10.0, 1.0);
  CHECK(report.gain_ratio == doctest::Approx(report.rho_eff_das / report.rho_eff_ps));
  CHECK(report.K == 10.0);
}

TEST_CASE("exact low-SNR ratios approach the 3 dB gain") {
  const double grid[] = {1e-2, 1e-3, 1e-4};
  const auto rows = asymp::verify_low_snr_limit(kPaper, grid);
  REQUIRE(rows.size() == 3);

  CHECK(rows[2].ratio_opt >= 1.98);
  CHECK(rows[2].ratio_opt <= 2.02);
  // convergence: the coarser rho sits farther from the limit
  CHECK(std::abs(rows[0].ratio_opt - 2.0) > std::abs(rows[2].ratio_opt - 2.0));
  // equal power (T = 2.5M here) shares the limit
  CHECK(rows[2].ratio_eq == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("high-SNR convergence rates") {
  const double grid[] = {4.0, 16.0, 64.0, 256.0};
  const auto report = asymp::verify_high_snr_convergence(grid);
  REQUIRE(report.points.size() == 4);

  // spot values: the data-aided gap is exactly 1/K^2
  CHECK(report.points[0].das_gap == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  const auto k100 = asymp::verify_high_snr_convergence(std::vector<double>{4.0, 100.0});
  CHECK(k100.points[1].ps_gap == doctest::Approx(20.0 / 121.0).epsilon(1e-12));
  CHECK(k100.points[1].das_gap == doctest::Approx(1e-4).epsilon(1e-12));

  CHECK(report.das_rate >= -2.1);
  CHECK(report.das_rate <= -1.9);
  CHECK(report.ps_rate >= -0.6);
  CHECK(report.ps_rate <= -0.4);
  // the pooled least-squares slope is shallower for the pilot scheme because
  // its gap has a slowly-varying prefactor; reported for reference
  CHECK(report.ps_ls_slope < -0.3);
  CHECK(report.das_ls_slope == doctest::Approx(-2.0).epsilon(1e-9));

  CHECK_THROWS_AS(asymp::verify_high_snr_convergence(std::vector<double>{1.5, 4.0}),
                  std::domain_error);
}

TEST_CASE("exact data-aided pipeline meets the table at high SNR") {
  // rho = 1e4, K = 10 (T = 11M), equal power: the exact value through the
  // fixed-point MSE and the distortion map lands within 1% of the table.
  const double rho = 1e4;
  const double c = 1.0 + rho;
  const double D = isac::das::rmt_mse(12, 12, c, rho, 120.0);
  const double exact = distortion_to_effective_snr(rho, D, 12, 12);
  const double table = asymp::high_snr_eff_snr(Power::Equal, Sensing::DAS, 10.0, rho);
  CHECK(std::abs(exact - table) / table < 0.01);
}
