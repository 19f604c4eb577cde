#pragma once

#include <vector>

#include "wring/geometry.hpp"
#include "wring/propagator.hpp"

namespace wring {

// System + preparation-protocol knobs shared by the parameter searches.
struct ProtocolConfig {
  int L = 5;
  double a = 6.0;
  double c6 = kDefaultC6;
  Truncation truncation = Truncation::Full;
  double omega = 15.0;
  double tau_omega_ramp = 0.25;
  double delta_initial = -40.0;
  EvolveOptions evolve{EvolveOptions::Method::CommutatorFree4, 2e-3};
};

struct SweepResult {
  std::vector<std::pair<double, double>> grid;  // (delta, F_th)
  std::pair<double, double> best;               // argmax; ties -> smaller delta
};

// F_th over a detuning grid at fixed t_final, via closed evolution from
// |g...g>. Deterministic; grid points evaluate in parallel.
SweepResult sweep_detuning(const ProtocolConfig& cfg, double t_final,
                           double delta_min, double delta_max,
                           double delta_step);

// Preparation fidelity at one (t_final, delta_final) point.
double protocol_fidelity(const ProtocolConfig& cfg, double t_final,
                         double delta_final);

struct MinTimeOptions {
  double target = 1e-3;        // infidelity target
  double t_start = 1.0;        // us, first bracketing attempt
  double t_max = 128.0;        // us, search budget
  double rel_width = 0.05;     // bisection stops at this relative bracket
  double delta_min = 10.0;
  double delta_max = 50.0;
  double delta_coarse = 4.0;   // first-pass grid step
  double delta_fine = 1.0;     // refinement step around the incumbent
  // Ramp time as a fraction of t_final (Table-1 ratio); <= 0 keeps the
  // fixed cfg.tau_omega_ramp instead.
  double tau_ratio = 0.125;
};

struct MinTimeResult {
  double t_star = 0.0;
  double delta_star = 0.0;     // re-optimized detuning at t_star
  double fidelity = 0.0;
  long evaluations = 0;        // number of full evolutions
};

// Smallest t_final (up to the bisection width) whose detuning-re-optimized
// infidelity meets the target: geometric bracketing by doubling, then
// bisection. Throws NumericalError when t_max is exhausted.
MinTimeResult min_time_for_infidelity(const ProtocolConfig& cfg,
                                      const MinTimeOptions& opts = {});

struct PowerLawFit {
  double exponent = 0.0;   // alpha in y = C * x^alpha
  double prefactor = 0.0;  // C
  double stderr_exponent = 0.0;
  int points_used = 0;
};

// Least-squares fit of log y against log x. Needs >= 3 points, all y > 0.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

}  // namespace wring
