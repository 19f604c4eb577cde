#pragma once

#include <string>
#include <vector>

#include "wring/ensemble.hpp"
#include "wring/geometry.hpp"
#include "wring/lindblad.hpp"
#include "wring/pulse.hpp"

namespace wring {

// Fully resolved experiment configuration. Units are part of the file
// contract: lengths in um, times in us, angular frequencies in rad/us,
// phases in rad.
struct ExperimentConfig {
  // [system]
  int L = 5;
  double a = 6.0;
  double c6 = kDefaultC6;
  Truncation truncation = Truncation::Full;

  // [prep]
  PrepParams prep;

  // [rotation]
  RotationParams rotation;
  // Omega_rot offsets defining the rotation-experiment variants
  std::vector<double> omega_rot_offsets{-1.0, -0.5, 0.0, 0.5, 1.0};

  // [noise]
  NoiseParams noise;

  // [ensemble]
  int ensemble_q = 100;
  int trajectories_per_member = 200;

  // [run]
  std::uint64_t seed = 1;
  int shots = 1000;
  EvolveOptions::Method method = EvolveOptions::Method::CommutatorFree4;
  double dt = 2e-3;

  // [limits]
  HardwareLimits limits;
  bool allow_unphysical = false;

  ConfusionModel confusion() const {
    return ConfusionModel{noise.p_g_to_r, noise.p_r_to_g};
  }
  EvolveOptions evolve_options() const {
    EvolveOptions o;
    o.method = method;
    o.dt = dt;
    return o;
  }
  RingGeometry geometry() const { return ring_positions(L, a); }
  Eigen::MatrixXd interactions() const {
    return interaction_matrix(geometry(), c6, truncation);
  }
  std::vector<RotationParams> rotation_variants() const;
  EnsembleConfig ensemble_config() const;

  // Hardware validation of geometry and preparation schedule; throws
  // ValidationError listing the violations unless allow_unphysical is set.
  void validate() const;

  // Canonical text form (the config echo embedded in every report).
  std::string echo() const;
};

// Parses the sectioned key = value format. Unknown sections or keys are
// rejected; parse and type errors carry line numbers and key names.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& text,
                              const std::string& origin = "<string>");

}  // namespace wring
