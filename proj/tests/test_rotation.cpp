#include <cmath>
#include <random>

#include "doctest.h"
#include "wring/geometry.hpp"
#include "wring/rotation.hpp"

using namespace wring;

namespace {

QuantumState random_pure(int L, unsigned seed) {
  std::mt19937 eng(seed);
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(Eigen::Index(1) << L);
  for (auto& x : v.reshaped()) x = cplx(nd(eng), nd(eng));
  v.normalize();
  return QuantumState::pure(std::move(v), L);
}

}  // namespace

TEST_CASE("operator fidelity basics") {
  const Eigen::MatrixXcd I2 = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd X(2, 2);
  X << 0, 1, 1, 0;
  CHECK(operator_fidelity(I2, I2) == doctest::Approx(1.0));
  CHECK(operator_fidelity(X, std::polar(1.0, 0.73) * X) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_fidelity(I2, X) == doctest::Approx(0.0));

  CHECK_THROWS_AS(operator_fidelity(I2, Eigen::MatrixXcd::Identity(4, 4)),
                  ValidationError);
  CHECK_THROWS_AS(operator_fidelity(2.0 * I2, I2), ValidationError);
}

TEST_CASE("ideal site rotation with phase pi/2 is the y-axis pi/2 pulse") {
  const auto u = ideal_site_rotation(M_PI / 2, M_PI / 2);
  // exp(-i pi/4 sigma_y) in the (g, r) ordering
  Eigen::Matrix2cd expect;
  const double r = 1.0 / std::sqrt(2.0);
  expect << r, r, -r, r;
  CHECK((u - expect).cwiseAbs().maxCoeff() < 1e-12);

  // it maps sigma_z readout onto (minus) sigma_x of the input state
  Eigen::Matrix2cd sz, sx;
  sz << -1, 0, 0, 1;
  sx << 0, 1, 1, 0;
  CHECK(((u.adjoint() * sz * u) + sx).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("far-separated atoms: hardware rotation equals the ideal rotation") {
  const int L = 3;
  const auto g = ring_positions(L, 6000.0);  // interactions ~ 1e-16
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
  HamiltonianOperator H(U, DriveTerms::uniform(0, 0));

  RotationParams rp;
  rp.omega_rot = M_PI / 2 / 0.2;  // area (tau_rot + ramp) * omega = pi/2
  rp.tau_rot = 0.15;
  rp.ramp = 0.05;
  rp.phase = M_PI / 2;
  const auto sched = build_rotation_schedule(rp);
  CHECK(pulse_area(sched) == doctest::Approx(M_PI / 2).epsilon(1e-12));

  const auto psi0 = random_pure(L, 7);
  const auto rotated = apply_rotation(psi0, sched, H, 0.0);
  const auto ideal = apply_ideal_rotation(psi0, M_PI / 2, M_PI / 2);
  CHECK((rotated.psi() - ideal.psi()).norm() < 1e-6);

  // density-matrix path agrees with the pure path
  const auto rotated_dm = apply_ideal_rotation(psi0.to_density(), M_PI / 2, M_PI / 2);
  CHECK((rotated_dm.rho() - ideal.to_density().rho()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("interacting ring: rotation deviates from the ideal basis change") {
  const int L = 3;
  const auto g = ring_positions(L, 6.0);
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
  HamiltonianOperator H(U, DriveTerms::uniform(0, 0));

  RotationParams rp;
  rp.omega_rot = 7.97;
  rp.tau_rot = 0.15;
  rp.ramp = 0.05;
  rp.phase = M_PI / 2;
  const auto sched = build_rotation_schedule(rp);

  const auto psi0 = random_pure(L, 11);
  const auto rotated = apply_rotation(psi0, sched, H, 0.0);
  const auto ideal = apply_ideal_rotation(psi0, pulse_area(sched), M_PI / 2);
  CHECK((rotated.psi() - ideal.psi()).norm() > 1e-2);
}

TEST_CASE("zero-duration rotation is the identity") {
  HamiltonianOperator H(Eigen::MatrixXd::Zero(2, 2),
                        DriveTerms::uniform(1.0, 0.0));
  PulseSchedule empty;
  empty.omega = Waveform::constant(0, 0, 0.0);
  empty.delta = Waveform::constant(0, 0, 0.0);
  empty.phi = Waveform::constant(0, 0, 0.0);
  empty.t_final = 0.0;
  const auto psi0 = random_pure(2, 3);
  const auto out = apply_rotation(psi0, empty, H, 0.0);
  CHECK((out.psi() - psi0.psi()).norm() == 0.0);
}

TEST_CASE("dense global rotation matches the sitewise application") {
  const int L = 4;
  const auto M = ideal_global_rotation(L, M_PI / 2, M_PI / 2);
  const auto psi0 = random_pure(L, 21);
  const Eigen::VectorXcd direct = M * psi0.psi();
  const auto mapped = apply_ideal_rotation(psi0, M_PI / 2, M_PI / 2);
  CHECK((direct - mapped.psi()).norm() < 1e-12);
}
