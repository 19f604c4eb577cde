#pragma once

#include <utility>
#include <vector>

#include "wring/common.hpp"

namespace wring {

// Two-photon resonance lineshape measured at t_pi:
//   P_e(Delta) = Om^2/(Om^2 + D^2) sin^2( sqrt(Om^2 + D^2) t_pi / 2 ),
// with D = Delta - delta_offset.
double resonance_probability(double omega, double delta_minus_offset,
                             double t_pi);

struct CalibrationFit {
  double omega = 0.0;         // calibrated Rabi frequency (rad/us)
  double delta_offset = 0.0;  // overall detuning offset (rad/us)
  double residual_rms = 0.0;
  int iterations = 0;
};

// Nonlinear least squares (Levenberg-Marquardt, numeric Jacobian) of the
// lineshape against (Delta, P_e) samples. Deterministic initialization:
// omega from t_pi (pi-pulse condition), offset from the sample peak.
// Needs at least 5 points; throws NumericalError when the iteration fails
// to converge.
CalibrationFit calibration_fit(
    const std::vector<std::pair<double, double>>& data, double t_pi);

}  // namespace wring
