#pragma once

#include <string>

#include "wring/ensemble.hpp"
#include "wring/state.hpp"

namespace wring {

// State file: "# wring-state v1 L=<L> kind=pure|density" followed by
// "index,re,im" triples (pure) or "row,col,re,im" entries (density),
// nonzero entries only, plain text.
void write_state_file(const std::string& path, const QuantumState& state);
QuantumState read_state_file(const std::string& path);

// Ensemble directory layout:
//   config.ini            resolved configuration echo + ensemble seed
//   members.csv           j,seed,omega_scale,delta_offset,f_estimator
//   member_<j>_z.csv      index,prob  (predicted z distribution)
//   member_<j>_x<a>.csv   index,prob  (per rotation variant a)
void save_ensemble(const std::string& dir, const PriorEnsemble& ensemble,
                   const ExperimentConfig& cfg);

struct StoredEnsemble {
  int L = 0;
  std::uint64_t seed = 0;
  int n_rotations = 0;
  PriorEnsemble ensemble;  // config fields beyond L are not reconstructed
};
StoredEnsemble load_ensemble(const std::string& dir);

}  // namespace wring
