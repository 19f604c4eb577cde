#include "wring/state.hpp"

#include <Eigen/Eigenvalues>

namespace wring {

QuantumState QuantumState::pure(Eigen::VectorXcd psi, int L) {
  if (psi.size() != Eigen::Index(1) << L) {
    throw ValidationError("state vector dimension does not match 2^L");
  }
  QuantumState s(Kind::Pure, L);
  s.psi_ = std::move(psi);
  return s;
}

QuantumState QuantumState::density(Eigen::MatrixXcd rho, int L) {
  const auto d = Eigen::Index(1) << L;
  if (rho.rows() != d || rho.cols() != d) {
    throw ValidationError("density matrix dimension does not match 2^L");
  }
  QuantumState s(Kind::Density, L);
  s.rho_ = std::move(rho);
  return s;
}

const Eigen::VectorXcd& QuantumState::psi() const {
  if (kind_ != Kind::Pure) throw ValidationError("state is not pure");
  return psi_;
}

const Eigen::MatrixXcd& QuantumState::rho() const {
  if (kind_ != Kind::Density) throw ValidationError("state is not a density matrix");
  return rho_;
}

Eigen::VectorXcd& QuantumState::psi() {
  if (kind_ != Kind::Pure) throw ValidationError("state is not pure");
  return psi_;
}

Eigen::MatrixXcd& QuantumState::rho() {
  if (kind_ != Kind::Density) throw ValidationError("state is not a density matrix");
  return rho_;
}

QuantumState QuantumState::to_density() const {
  if (kind_ == Kind::Density) return *this;
  return density(psi_ * psi_.adjoint(), L_);
}

Eigen::VectorXd QuantumState::z_probabilities() const {
  if (kind_ == Kind::Pure) return psi_.cwiseAbs2();
  return rho_.diagonal().real();
}

void QuantumState::validate(double tol, bool check_positivity) const {
  if (kind_ == Kind::Pure) {
    const double n = psi_.norm();
    if (std::abs(n - 1.0) > tol) {
      throw ValidationError("pure state norm drifted: |norm-1| = " +
                            std::to_string(std::abs(n - 1.0)));
    }
    return;
  }
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    throw ValidationError("density matrix not Hermitian: max dev " +
                          std::to_string(herm));
  }
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw ValidationError("density matrix trace drifted: |tr-1| = " +
                          std::to_string(std::abs(tr - 1.0)));
  }
  if (check_positivity) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_,
                                                       Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) {
      throw ValidationError("density matrix has eigenvalue " +
                            std::to_string(es.eigenvalues().minCoeff()));
    }
  }
}

}  // namespace wring
