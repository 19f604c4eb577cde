#include <cmath>

#include "doctest.h"
#include "wring/protocol.hpp"

using namespace wring;

TEST_CASE("power-law fit recovers a noiseless exponent exactly") {
  std::vector<std::pair<double, double>> pts;
  for (double L : {5.0, 7.0, 9.0, 11.0}) pts.push_back({L, 3.7 * L * L});
  const auto fit = fit_power_law(pts);
  CHECK(std::abs(fit.exponent - 2.0) < 1e-9);
  CHECK(fit.prefactor == doctest::Approx(3.7).epsilon(1e-9));
  CHECK(fit.stderr_exponent < 1e-9);
}

TEST_CASE("power-law fit is scale-equivariant in the prefactor") {
  std::vector<std::pair<double, double>> pts{{5, 2.0}, {7, 1.1}, {9, 0.7}, {11, 0.52}};
  const auto base = fit_power_law(pts);
  for (auto& p : pts) p.second *= 17.3;
  const auto scaled = fit_power_law(pts);
  CHECK(scaled.exponent == doctest::Approx(base.exponent).epsilon(1e-12));
  CHECK(scaled.stderr_exponent == doctest::Approx(base.stderr_exponent).epsilon(1e-9));
}

TEST_CASE("power-law fit input validation") {
  CHECK_THROWS_AS(fit_power_law({{5, 1.0}, {7, 0.5}}), ValidationError);
  CHECK_THROWS_AS(fit_power_law({{5, 1.0}, {7, -0.5}, {9, 0.1}}), ValidationError);
}

TEST_CASE("detuning sweep is deterministic with argmax ties toward smaller delta") {
  ProtocolConfig cfg;
  cfg.L = 3;
  const auto a = sweep_detuning(cfg, 1.0, 20.0, 30.0, 5.0);
  const auto b = sweep_detuning(cfg, 1.0, 20.0, 30.0, 5.0);
  REQUIRE(a.grid.size() == 3);
  for (std::size_t i = 0; i < a.grid.size(); ++i) {
    CHECK(a.grid[i].first == b.grid[i].first);
    CHECK(a.grid[i].second == b.grid[i].second);
  }
  CHECK(a.best.first == b.best.first);
  CHECK(a.best.second == b.best.second);

  // single-point grid: best is that point
  const auto one = sweep_detuning(cfg, 1.0, 29.0, 29.0, 1.0);
  CHECK(one.grid.size() == 1);
  CHECK(one.best.first == 29.0);

  CHECK_THROWS_AS(sweep_detuning(cfg, 1.0, 20.0, 30.0, 0.0), ValidationError);
}

TEST_CASE("widening the sweep range never lowers the best fidelity") {
  ProtocolConfig cfg;
  cfg.L = 3;
  const auto narrow = sweep_detuning(cfg, 1.0, 22.0, 34.0, 2.0);
  const auto wide = sweep_detuning(cfg, 1.0, 10.0, 50.0, 2.0);
  CHECK(wide.best.second >= narrow.best.second);
}

TEST_CASE("min-time search is consistent at the just-found target") {
  ProtocolConfig cfg;
  cfg.L = 5;
  MinTimeOptions mo;
  mo.target = 1e-2;
  const auto r = min_time_for_infidelity(cfg, mo);
  CHECK(1.0 - r.fidelity <= mo.target);

  // relaxing the target never increases t*
  MinTimeOptions loose = mo;
  loose.target = 5e-2;
  const auto r2 = min_time_for_infidelity(cfg, loose);
  CHECK(r2.t_star <= r.t_star + 1e-9);

  // target already met by the found schedule returns that t* or smaller
  MinTimeOptions same = mo;
  same.target = 1.0 - r.fidelity;
  const auto r3 = min_time_for_infidelity(cfg, same);
  CHECK(r3.t_star <= r.t_star + 1e-9);
}

TEST_CASE("min-time search reports exhaustion") {
  ProtocolConfig cfg;
  cfg.L = 3;
  MinTimeOptions mo;
  mo.target = 1e-12;
  mo.t_max = 2.0;
  CHECK_THROWS_AS(min_time_for_infidelity(cfg, mo), NumericalError);
}

TEST_CASE("bad target is rejected") {
  ProtocolConfig cfg;
  MinTimeOptions mo;
  mo.target = 0.0;
  CHECK_THROWS_AS(min_time_for_infidelity(cfg, mo), ValidationError);
}
