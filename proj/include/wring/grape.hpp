#pragma once

#include <cstdint>
#include <vector>

#include "wring/hamiltonian.hpp"
#include "wring/pulse.hpp"

namespace wring {

// Piecewise-constant control values over a fixed window.
struct GrapeControls {
  double duration = 0.25;  // us
  std::vector<double> omega;  // rad/us, per slice
  std::vector<double> phi;    // rad
  std::vector<double> delta;  // rad/us

  int slices() const { return static_cast<int>(omega.size()); }
  void validate() const;
};

struct GrapeOptions {
  int iterations = 300;
  // control bounds mirror the hardware limits
  double omega_max = 15.8;
  double abs_delta_max = 125.0;
  bool optimize_omega = true;
  bool optimize_phi = true;
  bool optimize_delta = true;
  double initial_step = 0.1;
  double min_step = 1e-12;
};

struct GrapeResult {
  GrapeControls controls;
  double fidelity = 0.0;
  // best-so-far operator fidelity after each iteration; monotone by
  // construction of the line search
  std::vector<double> trace;
};

// Total propagator of the piecewise-constant controls (dense; small L).
Eigen::MatrixXcd grape_propagator(const HamiltonianOperator& op,
                                  const GrapeControls& c);

// Operator fidelity |Tr(T^dag U)|^2 / d^2 of the controls against a target.
double grape_objective(const HamiltonianOperator& op,
                       const Eigen::MatrixXcd& target,
                       const GrapeControls& c);

// Exact gradient of the objective with respect to every per-slice control
// (omega, phi, delta), via the eigenbasis Frechet derivative of each slice
// exponential.
GrapeControls grape_gradient(const HamiltonianOperator& op,
                             const Eigen::MatrixXcd& target,
                             const GrapeControls& c);

// Projected gradient ascent with a backtracking line search from the given
// initial controls. Throws NumericalError on a non-finite gradient.
GrapeResult grape_optimize(const HamiltonianOperator& op,
                           const Eigen::MatrixXcd& target,
                           const GrapeControls& init,
                           const GrapeOptions& opts = {});

// Seeded random controls within bounds; the usual starting template.
GrapeControls random_controls(double duration, int slices, double omega_max,
                              std::uint64_t seed);

// Target U_y = exp(-i (pi/4) sum_l sigma_y_l), the global y-axis rotation.
Eigen::MatrixXcd rotation_target(int L);

// Step waveforms sampled at slice midpoints, for handoff to the evolvers.
PulseSchedule controls_to_schedule(const GrapeControls& c);

}  // namespace wring
