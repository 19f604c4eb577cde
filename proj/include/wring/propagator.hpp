#pragma once

#include <utility>
#include <vector>

#include "wring/hamiltonian.hpp"
#include "wring/pulse.hpp"
#include "wring/state.hpp"

namespace wring {

struct EvolveOptions {
  enum class Method {
    // Piecewise-constant H sampled at step midpoints, each step applied as
    // an exact (Krylov) exponential. Default step 0.5 ns.
    PiecewiseConstant,
    // Commutator-free fourth-order scheme: two exponentials per step with
    // H sampled at the two Gauss-Legendre nodes. Same unitarity guarantees,
    // much larger stable steps; used by the parameter searches.
    CommutatorFree4,
  };
  Method method = Method::PiecewiseConstant;
  double dt = 5e-4;           // us
  double krylov_tol = 1e-12;  // per-step relative error target
  int krylov_max = 96;
  double drift_tol = 1e-8;
  std::vector<double> snapshot_times;  // ascending; snapped to step ends
};

struct EvolutionDiagnostics {
  double norm_drift = 0.0;   // | ||psi|| - 1 | at the end (pure states)
  double trace_drift = 0.0;  // | tr rho - 1 | at the end (density states)
  long steps = 0;
  long matvecs = 0;
};

struct EvolutionResult {
  QuantumState final_state;
  std::vector<std::pair<double, QuantumState>> snapshots;
  EvolutionDiagnostics diagnostics;
};

// psi <- exp(-i dt H) psi via Lanczos with full reorthogonalization.
// Throws NumericalError if the error estimate cannot reach tol within
// max_m Krylov vectors. matvecs (optional) accumulates H applications.
void krylov_expm_inplace(const FrozenHamiltonian& H, double dt,
                         Eigen::Ref<Eigen::VectorXcd> psi, double tol,
                         int max_m, long* matvecs = nullptr);

// Uniform integration steps (start, length) whose boundaries include every
// waveform breakpoint, so each step sees a purely linear drive.
std::vector<std::pair<double, double>> schedule_steps(
    const PulseSchedule& schedule, double dt);

// The per-step exponential factors for one step [t0, t0+h]: apply
// exp(-i h F) for each entry in order. One factor for the midpoint rule,
// two for the commutator-free fourth-order scheme.
std::vector<FrozenHamiltonian> step_exponentials(const HamiltonianOperator& op,
                                                 const PulseSchedule& schedule,
                                                 double t0, double h,
                                                 EvolveOptions::Method method);

// Solve i d psi/dt = H(t) psi over [0, schedule.t_final] from psi0.
EvolutionResult evolve_closed(const HamiltonianOperator& op,
                              const PulseSchedule& schedule,
                              const QuantumState& psi0,
                              const EvolveOptions& opts = {});

}  // namespace wring
