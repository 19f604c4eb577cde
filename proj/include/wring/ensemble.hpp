#pragma once

#include "wring/geometry.hpp"
#include "wring/inference.hpp"
#include "wring/lindblad.hpp"
#include "wring/pulse.hpp"

namespace wring {

// One draw of the stochastic experiment parameters, frozen for a whole
// preparation + rotation sequence.
struct NoiseRealization {
  RingGeometry geometry;
  double omega_scale = 1.0;   // multiplies every commanded Rabi amplitude
  double delta_offset = 0.0;  // adds to every commanded detuning
  std::uint64_t seed = 0;
};

NoiseRealization draw_noise_realization(const RingGeometry& ideal,
                                        const NoiseParams& noise,
                                        std::uint64_t seed);

struct EnsembleConfig {
  int L = 5;
  double a = 6.0;
  double c6 = kDefaultC6;
  // Noisy simulations keep interactions to next-nearest neighbors.
  Truncation truncation = Truncation::NextNearest;
  PrepParams prep;
  std::vector<RotationParams> rotations;  // the M rotation experiments
  NoiseParams noise;
  ConfusionModel readout;
  int Q = 100;
  EvolveOptions evolve = open_defaults();
  // Trajectory fallback for L beyond the dense open-system cap.
  int trajectories_per_member = 200;
  bool keep_states = false;
};

struct EnsembleMember {
  std::uint64_t seed = 0;
  double omega_scale = 1.0;
  double delta_offset = 0.0;
  Eigen::VectorXd z_dist;                // predicted z histogram, readout applied
  std::vector<Eigen::VectorXd> x_dists;  // per rotation variant, readout applied
  double f_estimator = 0.0;              // F_e from exact rho_j quantities
  QuantumState state = QuantumState::pure(Eigen::VectorXcd::Ones(1), 0);
};

struct PriorEnsemble {
  EnsembleConfig config;
  std::uint64_t seed = 0;
  std::vector<EnsembleMember> members;

  std::vector<double> member_fidelities() const;
  double prior_mean() const;
  double prior_spread() const;
};

// Q independent noise draws -> open-system preparation simulations ->
// predicted z and post-rotation distributions (readout forward model
// applied) and the exact-estimator fidelity F_e of each member. Dense
// density-matrix simulations up to the open-system cap, trajectory
// averaging beyond (up to L = 13).
PriorEnsemble build_prior_ensemble(const EnsembleConfig& cfg,
                                   std::uint64_t seed);

EnsembleMember simulate_member(const EnsembleConfig& cfg,
                               std::uint64_t member_seed);

// One observed dataset entering the Bayesian update: its normalized
// histogram, the shot count, and which predicted distribution it matches
// (rotation_index >= 0 for the rotation experiments, -1 for the z data).
struct ExperimentData {
  Eigen::VectorXd histogram;
  long n_shots = 0;
  int rotation_index = -1;
};

// Q x M matrix of log likelihoods, epsilon = default_epsilon(N) per column.
Eigen::MatrixXd log_likelihood_matrix(const PriorEnsemble& ensemble,
                                      const std::vector<ExperimentData>& data);

}  // namespace wring
