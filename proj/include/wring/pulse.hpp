#pragma once

#include <utility>
#include <vector>

#include "wring/common.hpp"

namespace wring {

// Piecewise-linear waveform over time (us). Evaluation clamps to the
// endpoint values outside the breakpoint range.
class Waveform {
 public:
  Waveform() = default;
  // Breakpoint times must be strictly increasing.
  explicit Waveform(std::vector<std::pair<double, double>> breakpoints);

  static Waveform constant(double t0, double t1, double value);

  double value(double t) const;
  double operator()(double t) const { return value(t); }

  const std::vector<std::pair<double, double>>& breakpoints() const {
    return pts_;
  }
  double start_time() const { return pts_.front().first; }
  double end_time() const { return pts_.back().first; }
  double min_value() const;
  double max_value() const;
  // max |dv/dt| over the linear segments
  double max_slope() const;
  // exact integral over the full breakpoint range
  double integral() const;

 private:
  std::vector<std::pair<double, double>> pts_;
};

// Rabi amplitude, detuning and drive phase over [0, t_final].
struct PulseSchedule {
  Waveform omega;  // rad/us, must stay >= 0
  Waveform delta;  // rad/us
  Waveform phi;    // rad
  double t_final = 0.0;

  void validate() const;  // throws ValidationError on contract violations
};

struct PrepParams {
  double omega = 15.0;          // plateau Rabi amplitude (rad/us)
  double delta_final = 29.0;    // final detuning (rad/us)
  double t_final = 2.0;         // us
  double tau_omega_ramp = 0.25;  // us, up- and down-ramp duration
  double delta_initial = -40.0;  // rad/us, start deep in the trivial phase
  // Detuning ramp window; negative means "use the default"
  // [tau_omega_ramp, t_final - tau_omega_ramp].
  double delta_ramp_start = -1.0;
  double delta_ramp_end = -1.0;
};

// Adiabatic preparation sequence: Omega trapezoid 0 -> omega -> 0 with ramp
// time tau on each side; detuning holds at delta_initial, ramps linearly to
// delta_final across the middle window, then holds; phi identically zero.
PulseSchedule build_prep_schedule(const PrepParams& p);

struct RotationParams {
  double omega_rot = 7.97;  // rad/us
  double tau_rot = 0.15;    // us, plateau duration
  double ramp = 0.05;       // us, fast ramps (50 ns hardware default)
  double phase = 1.5707963267948966;  // rad; pi/2 selects a y-axis rotation
};

// Basis-change sequence: detuning identically zero, constant drive phase,
// Omega trapezoid with plateau tau_rot and the given ramps.
PulseSchedule build_rotation_schedule(const RotationParams& p);

// Integral of the Rabi waveform (rad); for the rotation trapezoid this is
// omega_rot * (tau_rot + ramp).
double pulse_area(const PulseSchedule& s);

}  // namespace wring
