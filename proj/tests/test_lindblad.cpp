#include <Eigen/Eigenvalues>
#include <cmath>

#include "doctest.h"
#include "wring/geometry.hpp"
#include "wring/lindblad.hpp"
#include "wring/observables.hpp"

using namespace wring;

namespace {

PulseSchedule constant_drive(double omega, double delta, double T) {
  PulseSchedule s;
  s.omega = Waveform::constant(0.0, T, omega);
  s.delta = Waveform::constant(0.0, T, delta);
  s.phi = Waveform::constant(0.0, T, 0.0);
  s.t_final = T;
  return s;
}

}  // namespace

TEST_CASE("single-qubit dephasing: coherence decays as exp(-gamma t / 2)") {
  const double gamma = 0.8;
  Eigen::MatrixXcd rho0(2, 2);
  const cplx c(0.31, -0.17);
  rho0 << 0.6, c, std::conj(c), 0.4;
  HamiltonianOperator H(Eigen::MatrixXd::Zero(1, 1), DriveTerms::uniform(0, 0));

  EvolveOptions opts = open_defaults();
  opts.snapshot_times = {0.5, 1.0, 2.0};
  const auto res = evolve_open(H, constant_drive(0, 0, 2.0),
                               QuantumState::density(rho0, 1), gamma, opts);
  for (const auto& [t, st] : res.snapshots) {
    const double expect = std::abs(c) * std::exp(-0.5 * gamma * t);
    CHECK(std::abs(std::abs(st.rho()(0, 1)) - expect) < 1e-6);
    // populations untouched by pure dephasing with Omega = 0
    CHECK(st.rho()(0, 0).real() == doctest::Approx(0.6).epsilon(1e-10));
  }
  CHECK(res.diagnostics.trace_drift < 1e-12);
}

TEST_CASE("gamma -> 0 reproduces closed evolution") {
  const int L = 3;
  const auto g = ring_positions(L, 6.0);
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
  HamiltonianOperator H(U, DriveTerms::uniform(0, 0));
  PrepParams p;
  p.t_final = 1.0;
  const auto s = build_prep_schedule(p);

  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(8);
  psi0[0] = 1.0;
  const auto pure0 = QuantumState::pure(psi0, L);

  // identical stepper settings so only the gamma -> 0 limit is probed
  const auto opts = open_defaults();
  const auto closed = evolve_closed(H, s, pure0, opts);
  const auto open = evolve_open(H, s, pure0.to_density(), 0.0, opts);
  const Eigen::MatrixXcd expect =
      closed.final_state.psi() * closed.final_state.psi().adjoint();
  CHECK((open.final_state.rho() - expect).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(std::abs(preparation_fidelity(open.final_state, L) -
                 preparation_fidelity(closed.final_state, L)) < 1e-8);
}

TEST_CASE("trace is preserved and the state stays positive throughout") {
  const int L = 3;
  const auto g = ring_positions(L, 6.0);
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
  HamiltonianOperator H(U, DriveTerms::uniform(0, 0));
  PrepParams p;
  p.t_final = 1.0;
  const auto s = build_prep_schedule(p);

  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(8);
  psi0[0] = 1.0;

  EvolveOptions opts = open_defaults();
  opts.snapshot_times = {0.25, 0.5, 0.75, 1.0};
  const auto res = evolve_open(H, s, QuantumState::pure(psi0, L).to_density(),
                               0.15, opts);
  CHECK(res.diagnostics.trace_drift < 1e-8);
  for (const auto& [t, st] : res.snapshots) {
    CHECK(std::abs(st.rho().trace().real() - 1.0) < 1e-8);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(st.rho(),
                                                       Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-7);
  }
}

TEST_CASE("capacity guard on the dense open path") {
  HamiltonianOperator H(Eigen::MatrixXd::Zero(10, 10),
                        DriveTerms::uniform(1.0, 0.0));
  Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(1024, 1024);
  rho0(0, 0) = 1.0;
  CHECK_THROWS_AS(evolve_open(H, constant_drive(1.0, 0.0, 0.1),
                              QuantumState::density(rho0, 10), 0.1),
                  CapacityError);
}

TEST_CASE("trajectory unravelling agrees with the dense master equation") {
  const int L = 3;
  const auto g = ring_positions(L, 6.0);
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
  HamiltonianOperator H(U, DriveTerms::uniform(0, 0));
  PrepParams p;
  p.omega = 11.46;
  p.t_final = 1.0;
  const auto s = build_prep_schedule(p);
  const double gamma = 0.4;

  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(8);
  psi0[0] = 1.0;
  const auto pure0 = QuantumState::pure(psi0, L);

  const auto dense = evolve_open(H, s, pure0.to_density(), gamma);
  const double f_dense = preparation_fidelity(dense.final_state, L);

  auto fid = [L](const QuantumState& st) { return preparation_fidelity(st, L); };
  const auto [mean, se] =
      trajectory_average(H, s, pure0, gamma, 600, 91, fid);
  CHECK(se < 0.02);
  CHECK(std::abs(mean - f_dense) < 4.0 * se + 1e-3);
}

TEST_CASE("trajectories are deterministic per seed and jumps do occur") {
  const int L = 2;
  HamiltonianOperator H(Eigen::MatrixXd::Zero(2, 2),
                        DriveTerms::uniform(3.0, 0.0));
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(4);
  psi0[0] = 1.0;
  const auto pure0 = QuantumState::pure(psi0, L);
  const auto s = constant_drive(3.0, 0.0, 2.0);

  const auto a = evolve_trajectory(H, s, pure0, 0.7, 1234);
  const auto b = evolve_trajectory(H, s, pure0, 0.7, 1234);
  CHECK((a.psi() - b.psi()).norm() == 0.0);
  CHECK(std::abs(a.psi().norm() - 1.0) < 1e-9);
}
