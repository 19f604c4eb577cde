#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wring/state.hpp"

namespace wring {

enum class Basis { Z, X };

const char* basis_name(Basis b);
Basis basis_from_string(const std::string& s);

// One experimental repetition: the initial-state readout (all-g when the
// rearrangement succeeded) and the final readout.
struct Shot {
  std::uint32_t pre = 0;
  std::uint32_t post = 0;
};

struct ShotSet {
  int L = 0;
  Basis basis = Basis::Z;
  std::string experiment_id;
  std::uint64_t seed = 0;
  std::vector<Shot> shots;

  std::size_t size() const { return shots.size(); }
};

// Per-site readout flip probabilities, independent across sites. The
// induced 2x2 map is column-stochastic by construction.
struct ConfusionModel {
  double p_g_to_r = 0.01;
  double p_r_to_g = 0.08;

  void validate() const;
};

// i.i.d. Born-rule draws, deterministic per seed. basis = X applies the
// exact single-site basis change (the ideal pi/2 rotation at drive phase
// pi/2) before sampling in z; this is the oracle path. The
// experiment-mimicking path rotates the state with apply_rotation first and
// samples in the z basis. Pre strings are all-g (perfect initialization);
// imperfect initial reads enter through apply_readout_noise.
ShotSet sample_bitstrings(const QuantumState& state, Basis basis, int n,
                          std::uint64_t seed,
                          const std::string& experiment_id = "");

// Flips every character of pre and post independently with the directional
// probabilities of the model.
ShotSet apply_readout_noise(const ShotSet& shots, const ConfusionModel& cm,
                            std::uint64_t seed);

// Forward model on a z-distribution over all 2^L strings (tensor-product
// application, O(L 2^L)).
Eigen::VectorXd readout_forward(const Eigen::VectorXd& probs, int L,
                                const ConfusionModel& cm);

struct MitigationResult {
  Eigen::VectorXd probs;      // inverse-confusion image, clipped to >= 0
  double clipped_mass = 0.0;  // negative mass removed before renormalizing
};

// Applies the exact inverse of the per-site confusion matrices to an
// observed distribution. Small negative entries from sampling noise are
// clipped and the distribution renormalized; the clipped mass is reported.
// Throws on a singular model (p_g_to_r + p_r_to_g = 1).
MitigationResult mitigate_readout(const Eigen::VectorXd& freq, int L,
                                  const ConfusionModel& cm);

struct PostselectResult {
  ShotSet shots;
  std::size_t discarded = 0;
};

// Keeps shots whose pre string matches (default: all atoms in g).
PostselectResult postselect_shots(const ShotSet& shots,
                                  std::uint32_t required_pre = 0);

// Normalized histogram of post strings over all 2^L indices.
Eigen::VectorXd shot_histogram(const ShotSet& shots);

}  // namespace wring
