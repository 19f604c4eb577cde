#include "wring/rotation.hpp"

#include <cmath>

#include "wring/kernels.hpp"

namespace wring {

double operator_fidelity(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V,
                         double unitarity_tol) {
  if (U.rows() != U.cols() || V.rows() != V.cols() || U.rows() != V.rows()) {
    throw ValidationError("operator fidelity needs equal square dimensions");
  }
  const Eigen::Index d = U.rows();
  const auto check = [&](const Eigen::MatrixXcd& M, const char* name) {
    const double dev =
        (M.adjoint() * M - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > unitarity_tol) {
      throw ValidationError(std::string(name) + " is not unitary: deviation " +
                            std::to_string(dev));
    }
  };
  check(U, "first operator");
  check(V, "second operator");
  const cplx tr = (U.adjoint() * V).trace();
  return std::norm(tr) / double(d * d);
}

Eigen::Matrix2cd ideal_site_rotation(double area, double phase) {
  Eigen::Matrix2cd u;
  const double c = std::cos(0.5 * area), s = std::sin(0.5 * area);
  const cplx mi(0.0, -1.0);
  u << c, mi * s * std::polar(1.0, phase), mi * s * std::polar(1.0, -phase), c;
  return u;
}

Eigen::MatrixXcd ideal_global_rotation(int L, double area, double phase) {
  if (L > 10) {
    throw CapacityError("dense global rotation capped at L=10");
  }
  const Eigen::Matrix2cd u = ideal_site_rotation(area, phase);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int l = 0; l < L; ++l) {
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    // site l is bit l: the new factor is the outer (slow) index
    next.block(0, 0, out.rows(), out.cols()) = u(0, 0) * out;
    next.block(0, out.cols(), out.rows(), out.cols()) = u(0, 1) * out;
    next.block(out.rows(), 0, out.rows(), out.cols()) = u(1, 0) * out;
    next.block(out.rows(), out.cols(), out.rows(), out.cols()) = u(1, 1) * out;
    out = std::move(next);
  }
  return out;
}

namespace {

void apply_site_maps(Eigen::VectorXcd& v, int L, const Eigen::Matrix2cd& u) {
  for (int l = 0; l < L; ++l) {
    kernels::site_map2(v.size(), std::size_t(1) << l, u(0, 0), u(0, 1),
                       u(1, 0), u(1, 1), v.data());
  }
}

}  // namespace

QuantumState apply_ideal_rotation(const QuantumState& state, double area,
                                  double phase) {
  const int L = state.sites();
  const Eigen::Matrix2cd u = ideal_site_rotation(area, phase);
  if (state.is_pure()) {
    Eigen::VectorXcd psi = state.psi();
    apply_site_maps(psi, L, u);
    return QuantumState::pure(std::move(psi), L);
  }
  Eigen::MatrixXcd rho = state.rho();
  const Eigen::Matrix2cd uc = u.conjugate();
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    for (int l = 0; l < L; ++l) {
      kernels::site_map2(rho.rows(), std::size_t(1) << l, u(0, 0), u(0, 1),
                         u(1, 0), u(1, 1), rho.col(c).data());
    }
  }
  // right multiplication by u^dagger == conjugate maps on rows
  rho.transposeInPlace();
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    for (int l = 0; l < L; ++l) {
      kernels::site_map2(rho.rows(), std::size_t(1) << l, uc(0, 0), uc(0, 1),
                         uc(1, 0), uc(1, 1), rho.col(c).data());
    }
  }
  rho.transposeInPlace();
  return QuantumState::density(std::move(rho), L);
}

QuantumState apply_rotation(const QuantumState& state,
                            const PulseSchedule& rotation,
                            const HamiltonianOperator& op, double gamma,
                            const EvolveOptions& opts) {
  if (rotation.t_final <= 0.0) return state;
  if (state.is_pure() && gamma == 0.0) {
    return evolve_closed(op, rotation, state, opts).final_state;
  }
  return evolve_open(op, rotation, state, gamma, opts).final_state;
}

}  // namespace wring
