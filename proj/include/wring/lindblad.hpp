#pragma once

#include <cstdint>
#include <functional>

#include "wring/propagator.hpp"

namespace wring {

// Stochastic experiment imperfections: local dephasing, frozen thermal atom
// motion, global shot-to-shot drive fluctuations, and readout flips.
struct NoiseParams {
  double gamma = 0.0;            // dephasing rate (rad/us)
  double sigma_pos = 0.0;        // um, per-coordinate position spread
  double sigma_omega_rel = 0.0;  // relative global Rabi fluctuation
  double sigma_delta = 0.0;      // rad/us, global detuning offset spread
  double p_g_to_r = 0.0;         // readout flip probabilities
  double p_r_to_g = 0.0;

  void validate() const;
};

constexpr int kDenseOpenMaxSites = 9;
constexpr int kTrajectoryMaxSites = 13;

inline EvolveOptions open_defaults() {
  EvolveOptions o;
  o.method = EvolveOptions::Method::PiecewiseConstant;
  o.dt = 1e-3;
  return o;
}

// Dephasing master equation
//   rho' = -i[H, rho] + (gamma/2) sum_l (2 n_l rho n_l - {rho, n_l})
// integrated by Strang splitting: the dissipator is exact (it damps each
// coherence by exp(-gamma dt d_H(i,j)/2) with d_H the Hamming distance) and
// the unitary half is the Krylov stepper. Trace is preserved identically.
// Dense density-matrix path; capped at L <= 9.
EvolutionResult evolve_open(const HamiltonianOperator& op,
                            const PulseSchedule& schedule,
                            const QuantumState& rho0, double gamma,
                            const EvolveOptions& opts = open_defaults());

// Jump-unravelled pure-state trajectories for the same master equation
// (first-order jump/no-jump with step control). obs is evaluated on each
// trajectory's final state; the returned pair is (mean, standard error of
// the mean) over n_traj trajectories. Usable up to L <= 13.
std::pair<double, double> trajectory_average(
    const HamiltonianOperator& op, const PulseSchedule& schedule,
    const QuantumState& psi0, double gamma, int n_traj, std::uint64_t seed,
    const std::function<double(const QuantumState&)>& obs,
    const EvolveOptions& opts = open_defaults());

// One unravelled trajectory (exposed for the ensemble builder).
QuantumState evolve_trajectory(const HamiltonianOperator& op,
                               const PulseSchedule& schedule,
                               const QuantumState& psi0, double gamma,
                               std::uint64_t seed,
                               const EvolveOptions& opts = open_defaults());

}  // namespace wring
