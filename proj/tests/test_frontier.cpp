#include "isac/frontier.hpp"

#include <cmath>

#include "doctest.h"
#include "isac/das_sensing.hpp"
#include "isac/optimize.hpp"
#include "isac/pilot_sensing.hpp"
#include "oracles.hpp"

using namespace isac;

TEST_CASE("golden_section_max") {
  const double tol = 1e-8;
  const double x1 = opt::golden_section_max([](double x) { return -(x - 2.0) * (x - 2.0); }, 0.0,
                                            5.0, tol);
  CHECK(std::abs(x1 - 2.0) <= tol);
  const double x2 = opt::golden_section_max([](double x) { return x; }, 0.0, 1.0, 1e-6);
  CHECK(std::abs(x2 - 1.0) <= 1e-6);
  const double x3 = opt::golden_section_max([](double x) { return x * (10.0 - x); }, 0.0, 10.0, 1e-7);
  CHECK(std::abs(x3 - 5.0) <= 1e-7);
  CHECK_THROWS_AS(opt::golden_section_max([](double x) { return x; }, 1.0, 0.0, 1e-6),
                  std::invalid_argument);
}

TEST_CASE("rate_at_split") {
  const SystemConfig config(2, 2, 10.0, 1.0);
  mc::McConfig mc{3000, 1001, 64};

  SUBCASE("degenerate splits give zero rate") {
    const auto all_pilots = frontier::rate_at_split(config, {10.0, 1.0, 0.0}, mc);
    CHECK(all_pilots.mean == 0.0);
    const auto no_data_power = frontier::rate_at_split(config, {2.0, 1.0, 0.0}, mc);
    CHECK(no_data_power.mean == 0.0);
  }
  SUBCASE("invalid splits are rejected") {
    CHECK_THROWS_AS(frontier::rate_at_split(config, {2.0, 5.0, 1.0}, mc), std::invalid_argument);
  }
  SUBCASE("2x2 equal power matches the eigen-density quadrature") {
    // T_tau = 2, rho_tau = rho_d = 1: rho_eff = 1/3 and the rate is
    // 0.8 * E[log2 det(I_2 + (1/6) H H^H)].
    const auto est = frontier::rate_at_split(config, {2.0, 1.0, 1.0}, mc);
    const double oracle = 0.8 * oracles::mimo2x2_rate_bits(1.0 / 6.0);
    CHECK(std::abs(est.mean - oracle) <= 3.0 * est.std_err);
  }
}

TEST_CASE("rd_curve structure and determinism") {
  const SystemConfig config(4, 4, 12.0, 2.0);
  mc::McConfig mc{600, 555, 32};

  for (const char* name : {"ps-opt", "ps-eq", "das-opt", "das-eq"}) {
    CAPTURE(name);
    frontier::CurveRequest request{config, scheme_from_string(name), 10, mc};
    const auto curve = frontier::rd_curve(request);

    REQUIRE(curve.points.size() == 10);
    CHECK(curve.points.front().D == curve.D_min);
    CHECK(curve.points.back().D == doctest::Approx(curve.D_star).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i)
      CHECK(curve.points[i].D < curve.points[i + 1].D);

    for (const auto& p : curve.points) {
      CHECK(p.operational);
      CHECK(validate_split(config, p.split));
      // emitted splits saturate the energy budget
      const double spent = p.split.rho_tau * p.split.T_tau +
                           p.split.rho_d * (config.T - p.split.T_tau);
      CHECK(spent == doctest::Approx(config.rho * config.T).epsilon(1e-9));
      CHECK(p.R >= 0.0);
    }

    // rates do not decrease along the curve beyond the Monte Carlo band
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
      const auto& a = curve.points[i];
      const auto& b = curve.points[i + 1];
      CHECK(b.R >= a.R - 2.0 * std::sqrt(a.R_std_err * a.R_std_err + b.R_std_err * b.R_std_err));
    }

    // a rerun of the same request reproduces the curve exactly
    const auto again = frontier::rd_curve(request);
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      CHECK(curve.points[i].R == again.points[i].R);
      CHECK(curve.points[i].split.T_tau == again.points[i].split.T_tau);
      CHECK(curve.points[i].split.rho_tau == again.points[i].split.rho_tau);
      CHECK(curve.points[i].split.rho_d == again.points[i].split.rho_d);
    }
  }
}

TEST_CASE("rd_curve endpoints: optimal-power curves start at zero rate") {
  const SystemConfig config(4, 4, 12.0, 2.0);
  mc::McConfig mc{400, 808, 32};
  for (const char* name : {"ps-opt", "das-opt"}) {
    frontier::CurveRequest request{config, scheme_from_string(name), 6, mc};
    const auto curve = frontier::rd_curve(request);
    CHECK(curve.points.front().R == 0.0);  // all power in the pilots
    CHECK(curve.points.front().rho_eff <= 1e-12);
  }
}

TEST_CASE("all four curves share the same leftmost distortion") {
  const SystemConfig config(4, 4, 12.0, 2.0);
  mc::McConfig mc{300, 99, 32};
  const double expected = min_sensing_distortion(4, 4, 12.0, 2.0);
  for (const char* name : {"ps-opt", "ps-eq", "das-opt", "das-eq"}) {
    frontier::CurveRequest request{config, scheme_from_string(name), 4, mc};
    CHECK(frontier::rd_curve(request).points.front().D == expected);
  }
}

TEST_CASE("data-aided curve dominates the pilot-only curve (optimal power)") {
  const SystemConfig config(12, 12, 30.0, std::sqrt(10.0));
  mc::McConfig mc{1000, 321, 64};

  // common distortion grid on the intersection of the effective domains,
  // rated with common random numbers
  const double d_min = min_sensing_distortion(12, 12, 30.0, config.rho);
  const double d_hi = std::min(ps::opt_domain(config).D_star, das::opt_domain(config).D_star);
  for (int i = 0; i <= 8; ++i) {
    const double D = d_min + (d_hi - d_min) * i / 8.0;
    const auto ps_split = frontier::split_of_distortion(config, {Sensing::PS, Power::Optimal}, D);
    const auto das_split = frontier::split_of_distortion(config, {Sensing::DAS, Power::Optimal}, D);
    const auto r_ps = frontier::rate_at_split(config, ps_split, mc);
    const auto r_das = frontier::rate_at_split(config, das_split, mc);
    CHECK(r_das.mean >= r_ps.mean - 2.0 * std::sqrt(r_ps.std_err * r_ps.std_err +
                                                    r_das.std_err * r_das.std_err));
  }
}

TEST_CASE("inactive branch extension flags points past D_star") {
  const SystemConfig config(4, 4, 12.0, 2.0);
  mc::McConfig mc{300, 7, 32};
  frontier::CurveRequest request{config, {Sensing::PS, Power::Optimal}, 12, mc, true};
  const auto curve = frontier::rd_curve(request);
  CHECK(curve.points.back().D == doctest::Approx(config.prior_variance()).epsilon(1e-12));
  bool saw_inactive = false;
  for (const auto& p : curve.points) {
    if (!p.operational) {
      saw_inactive = true;
      CHECK(p.D > curve.D_star);
    }
  }
  CHECK(saw_inactive);
}
