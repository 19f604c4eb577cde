#pragma once

#include <Eigen/Dense>

#include "wring/common.hpp"

namespace wring {

// Pure amplitude vector or density matrix over L two-level atoms, in the
// computational z-basis with the ordering documented in basis.hpp.
class QuantumState {
 public:
  enum class Kind { Pure, Density };

  static QuantumState pure(Eigen::VectorXcd psi, int L);
  static QuantumState density(Eigen::MatrixXcd rho, int L);

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::Pure; }
  int sites() const { return L_; }
  std::size_t dim() const { return std::size_t(1) << L_; }

  const Eigen::VectorXcd& psi() const;
  const Eigen::MatrixXcd& rho() const;
  Eigen::VectorXcd& psi();
  Eigen::MatrixXcd& rho();

  // |psi><psi| for pure states, identity for density states.
  QuantumState to_density() const;

  // z-basis Born probabilities (diagonal of rho / |amplitudes|^2).
  Eigen::VectorXd z_probabilities() const;

  // Throws ValidationError when norm/trace/hermiticity are off by more than
  // tol; the positivity check (smallest eigenvalue >= -tol) is optional
  // because it costs a full eigendecomposition.
  void validate(double tol = 1e-9, bool check_positivity = false) const;

 private:
  QuantumState(Kind kind, int L) : kind_(kind), L_(L) {}

  Kind kind_;
  int L_;
  Eigen::VectorXcd psi_;
  Eigen::MatrixXcd rho_;
};

}  // namespace wring
