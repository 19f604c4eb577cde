#pragma once

#include <cstdint>
#include <vector>

#include "wring/hamiltonian.hpp"

namespace wring {

struct SpectrumOptions {
  int k = 4;                  // number of lowest eigenvalues
  double tol = 1e-9;          // Ritz residual tolerance (iterative path)
  int max_iter = 350;         // Lanczos iterations per eigenvalue
  std::uint64_t seed = 0x5eedULL;
  double cluster_eta = 0.15;  // quasi-degeneracy detection ratio
  std::size_t dense_dim_cap = 512;  // use dense diagonalization up to here
};

struct SpectrumResult {
  std::vector<double> evals;  // k lowest, ascending
  double gap = 0.0;           // E1 - E0
  // Size m of the quasi-degenerate ground cluster: largest m with
  // E_{m-1} - E_0 <= eta * (E_m - E_{m-1}).
  int ground_degeneracy = 1;
  double band_gap = 0.0;      // E_m - E_{m-1} above the cluster
  bool used_dense = false;
};

// k lowest eigenvalues by Lanczos with full reorthogonalization and
// deflation of converged eigenvectors. Handles (near-)degenerate levels.
std::vector<double> lanczos_lowest(const FrozenHamiltonian& H, int k,
                                   double tol, int max_iter,
                                   std::uint64_t seed);

// Two lowest eigenvalues (and a few more for degeneracy bookkeeping) of the
// operator at its stored drive. Dense diagonalization below the dimension
// cap, deflated Lanczos above it.
SpectrumResult spectral_gap(const HamiltonianOperator& op,
                            const SpectrumOptions& opts = {});

}  // namespace wring
