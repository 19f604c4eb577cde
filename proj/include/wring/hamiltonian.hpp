#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wring/common.hpp"

namespace wring {

// Global or per-site drive values at one instant. Size-1 vectors broadcast
// to every site.
struct DriveTerms {
  std::vector<double> omega{0.0};  // rad/us, >= 0
  std::vector<double> delta{0.0};  // rad/us
  double phi = 0.0;                // rad

  static DriveTerms uniform(double omega, double delta, double phi = 0.0) {
    return DriveTerms{{omega}, {delta}, phi};
  }
  double omega_at(int site) const {
    return omega.size() == 1 ? omega[0] : omega[site];
  }
  double delta_at(int site) const {
    return delta.size() == 1 ? delta[0] : delta[site];
  }
};

// H frozen at fixed drive values: full diagonal plus one complex coupling
// per site. This is the hot object the propagators apply repeatedly.
struct FrozenHamiltonian {
  int L = 0;
  std::size_t dim = 0;
  std::vector<double> diag;    // interaction + detuning diagonal
  std::vector<cplx> site_w;    // per site: (omega_l / 2) e^{i phi}

  // y = H x; x and y must not alias.
  void apply(const cplx* x, cplx* y) const;
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;

  // Cheap bound on the spectral range, used to size Krylov spaces.
  double spectral_range_bound() const;
};

// The Rydberg-ring Hamiltonian
//   H = sum_{l<j} U_{lj} n_l n_j
//     + sum_l [ (omega_l/2)(e^{i phi}|g_l><r_l| + h.c.) - delta_l n_l ]
// in the z-basis of basis.hpp (bit set = |r>). The interaction matrix is
// fixed at construction; drive values are supplied when freezing or
// densifying. Site counts are capped at L = 13 (desk-scale dense basis).
class HamiltonianOperator {
 public:
  HamiltonianOperator(Eigen::MatrixXd interactions, DriveTerms drive);

  int sites() const { return L_; }
  std::size_t dim() const { return dim_; }
  const Eigen::MatrixXd& interactions() const { return U_; }
  const DriveTerms& drive() const { return drive_; }

  // Static per-site envelope factors: omega_l(t) = scale_l * Omega(t),
  // delta_l(t) = Delta(t) + offset_l. Used for spatial inhomogeneity.
  void set_site_inhomogeneity(std::vector<double> omega_scale,
                              std::vector<double> delta_offset);

  FrozenHamiltonian freeze() const { return freeze(drive_); }
  FrozenHamiltonian freeze(const DriveTerms& d) const;
  FrozenHamiltonian freeze_at(double omega, double delta, double phi) const;

  // Frozen linear combination c1*H(d1) + c2*H(d2) (both interaction terms
  // included, so the diagonal carries weight c1+c2). Used by the
  // commutator-free fourth-order stepper.
  FrozenHamiltonian freeze_combo(double c1, const DriveTerms& d1, double c2,
                                 const DriveTerms& d2) const;

  // Dense matrix for diagnostics, small-system work, and oracles.
  Eigen::MatrixXcd dense() const { return dense(drive_); }
  Eigen::MatrixXcd dense(const DriveTerms& d) const;

  const std::vector<double>& interaction_diagonal() const { return int_diag_; }

 private:
  void resolve(const DriveTerms& d, std::vector<double>& omega_site,
               std::vector<double>& delta_site) const;

  int L_;
  std::size_t dim_;
  Eigen::MatrixXd U_;
  std::vector<double> int_diag_;
  DriveTerms drive_;
  std::vector<double> omega_scale_;   // empty = homogeneous
  std::vector<double> delta_offset_;  // empty = homogeneous
};

// Spec-level constructor: validates the interaction matrix and drive and
// builds the operator.
HamiltonianOperator build_hamiltonian(const Eigen::MatrixXd& interactions,
                                      const DriveTerms& drive);

}  // namespace wring
