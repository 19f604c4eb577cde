#include <cmath>

#include "doctest.h"
#include "wring/ensemble.hpp"

using namespace wring;

namespace {

EnsembleConfig small_config(int Q) {
  EnsembleConfig cfg;
  cfg.L = 5;
  cfg.prep.omega = 11.46;
  cfg.prep.delta_final = 29.0;
  cfg.prep.t_final = 2.0;
  cfg.prep.tau_omega_ramp = 0.25;
  RotationParams rot;
  rot.omega_rot = 7.97;
  cfg.rotations = {rot};
  cfg.noise.gamma = 0.02;
  cfg.noise.sigma_pos = 0.15;
  cfg.noise.sigma_omega_rel = 0.01;
  cfg.noise.sigma_delta = 0.5;
  cfg.readout = {0.01, 0.08};
  cfg.Q = Q;
  cfg.evolve.dt = 2e-3;
  return cfg;
}

}  // namespace

TEST_CASE("zero noise makes a degenerate ensemble") {
  auto cfg = small_config(3);
  cfg.noise = NoiseParams{};
  cfg.readout = {0.0, 0.0};
  const auto ens = build_prior_ensemble(cfg, 11);
  REQUIRE(ens.members.size() == 3);
  for (int j = 1; j < 3; ++j) {
    CHECK((ens.members[j].z_dist - ens.members[0].z_dist).cwiseAbs().maxCoeff() <
          1e-14);
    CHECK(ens.members[j].f_estimator ==
          doctest::Approx(ens.members[0].f_estimator).epsilon(1e-12));
  }
  CHECK(ens.prior_spread() < 1e-12);
}

TEST_CASE("noisy ensemble members are distinct, normalized, and reproducible") {
  auto cfg = small_config(12);
  const auto ens = build_prior_ensemble(cfg, 21);
  CHECK(ens.prior_spread() > 1e-4);
  for (const auto& m : ens.members) {
    CHECK(std::abs(m.z_dist.sum() - 1.0) < 1e-8);
    REQUIRE(m.x_dists.size() == 1);
    CHECK(std::abs(m.x_dists[0].sum() - 1.0) < 1e-8);
    CHECK(m.f_estimator >= 0.0);
    CHECK(m.f_estimator <= 1.0 + 1e-9);
  }
  const auto again = build_prior_ensemble(cfg, 21);
  for (int j = 0; j < cfg.Q; ++j) {
    CHECK(again.members[j].f_estimator ==
          doctest::Approx(ens.members[j].f_estimator).epsilon(1e-14));
  }
}

TEST_CASE("posterior concentrates on the generating member as N grows") {
  auto cfg = small_config(8);
  const auto ens = build_prior_ensemble(cfg, 33);
  const int truth = 5;

  // exact predicted distributions as the infinite-shot limit of data
  auto weight_of_truth = [&](long n) {
    std::vector<ExperimentData> data;
    data.push_back({ens.members[truth].z_dist, n, -1});
    data.push_back({ens.members[truth].x_dists[0], n, 0});
    const auto w = posterior_weights(log_likelihood_matrix(ens, data));
    return w.w[truth];
  };
  const double w100 = weight_of_truth(100);
  const double w10000 = weight_of_truth(10000);
  CHECK(w10000 >= w100 - 1e-12);
  CHECK(w10000 > 0.5);

  Eigen::Index argmax;
  std::vector<ExperimentData> data;
  data.push_back({ens.members[truth].z_dist, 10000, -1});
  data.push_back({ens.members[truth].x_dists[0], 10000, 0});
  posterior_weights(log_likelihood_matrix(ens, data)).w.maxCoeff(&argmax);
  CHECK(argmax == truth);
}

TEST_CASE("ensemble configuration validation") {
  auto cfg = small_config(0);
  CHECK_THROWS_AS(build_prior_ensemble(cfg, 1), ValidationError);
  cfg = small_config(1);
  cfg.L = 14;
  CHECK_THROWS_AS(build_prior_ensemble(cfg, 1), CapacityError);
}
