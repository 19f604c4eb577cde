#pragma once

#include <cstdint>
#include <vector>

#include "wring/state.hpp"

namespace wring {

// |K_S> = (1/sqrt(L)) sum_k |k>_AFM, the W-like target state. L must be odd.
QuantumState kink_superposition(int L);

// Overlap-squared |<K_S|psi>|^2, or <K_S|rho|K_S> for density matrices.
double preparation_fidelity(const QuantumState& state, int L);

// Bit masks of all even-length contiguous site windows on the ring:
// window lengths 2n for n = 1..(L-1)/2, each at L starting positions.
std::vector<std::uint32_t> px_window_masks(int L);

// Tr(rho P_x) with P_x the sum of sigma^x strings over all even-length
// contiguous windows. Evaluates each string as an index flip; no dense
// operator is formed.
double px_expectation(const QuantumState& state, int L);

// Distribution of the total Rydberg count (length L+1) for a z-basis
// probability vector over all 2^L strings.
std::vector<double> magnetization_histogram(const Eigen::VectorXd& z_probs,
                                            int L);

}  // namespace wring
