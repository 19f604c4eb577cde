#pragma once

#include "wring/lindblad.hpp"

namespace wring {

// |Tr(U^dagger V)|^2 / d^2, invariant under global phases. Both matrices
// must be unitary within unitarity_tol and of equal dimension.
double operator_fidelity(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V,
                         double unitarity_tol = 1e-8);

// Single-site image of an interaction-free rotation pulse with total area
// `area` and drive phase `phase`:
//   exp(-i (area/2) [[0, e^{i phase}], [e^{-i phase}, 0]])
// With area = pi/2 and phase = pi/2 this is exp(-i (pi/4) sigma_y), the
// basis change used for x-measurements (sign convention fixed here; only
// even sigma_x strings are estimated downstream, which are insensitive to
// the per-site sign).
Eigen::Matrix2cd ideal_site_rotation(double area, double phase);

// Dense tensor power of the site rotation; for oracles and small systems.
Eigen::MatrixXcd ideal_global_rotation(int L, double area, double phase);

// Applies the ideal (non-interacting) global rotation in place via
// single-site maps; works for pure and density states at any supported L.
QuantumState apply_ideal_rotation(const QuantumState& state, double area,
                                  double phase);

// The experiment-mimicking rotation: evolve under the full interacting
// Hamiltonian with the rotation schedule (Delta = 0, fixed phase);
// interactions stay on throughout. gamma > 0 or a density input selects the
// dephasing path.
QuantumState apply_rotation(const QuantumState& state,
                            const PulseSchedule& rotation,
                            const HamiltonianOperator& op, double gamma,
                            const EvolveOptions& opts = open_defaults());

}  // namespace wring
