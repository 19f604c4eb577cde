#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "doctest.h"
#include "wring/basis.hpp"
#include "wring/geometry.hpp"
#include "wring/hamiltonian.hpp"

using namespace wring;

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return out;
}

// Single-site operator embedded on `site` of an L-atom register, honoring
// the site-0-is-LSB index convention (site 0 is the innermost factor).
Eigen::MatrixXcd embed(const Eigen::Matrix2cd& op, int site, int L) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int l = L - 1; l >= 0; --l) {
    const Eigen::MatrixXcd factor =
        (l == site) ? Eigen::MatrixXcd(op)
                    : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity());
    out = kron(out, factor);
  }
  return out;
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
Eigen::Matrix2cd pauli_y() {
  // Written in the (g, r) = (down, up) ordering used by the basis
  // convention: <g|sy|r> = +i, <r|sy|g> = -i.
  Eigen::Matrix2cd m;
  m << 0, cplx(0, 1), cplx(0, -1), 0;
  return m;
}
Eigen::Matrix2cd pauli_z() {
  // |g> maps to spin-down, |r> to spin-up: n = (1 + sigma_z)/2
  Eigen::Matrix2cd m;
  m << -1, 0, 0, 1;
  return m;
}

}  // namespace

TEST_CASE("single atom with pure drive splits by +-Omega/2") {
  const double om = 3.7;
  HamiltonianOperator H(Eigen::MatrixXd::Zero(1, 1),
                        DriveTerms::uniform(om, 0.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.dense());
  CHECK(es.eigenvalues()(0) == doctest::Approx(-om / 2).epsilon(1e-12));
  CHECK(es.eigenvalues()(1) == doctest::Approx(om / 2).epsilon(1e-12));
}

TEST_CASE("two far atoms with detuning only give {0, -D, -D, -2D}") {
  const double delta = 2.5;
  HamiltonianOperator H(Eigen::MatrixXd::Zero(2, 2),
                        DriveTerms::uniform(0.0, delta));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.dense());
  CHECK(es.eigenvalues()(0) == doctest::Approx(-2 * delta));
  CHECK(es.eigenvalues()(1) == doctest::Approx(-delta));
  CHECK(es.eigenvalues()(2) == doctest::Approx(-delta));
  CHECK(es.eigenvalues()(3) == doctest::Approx(0.0));
}

TEST_CASE("classical ground manifold excludes adjacent Rydberg pairs") {
  const auto g = ring_positions(3, 6.0);
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
  HamiltonianOperator H(U, DriveTerms::uniform(0.0, 0.0));
  const auto dense = H.dense();
  for (std::uint32_t idx = 0; idx < 8; ++idx) {
    const double e = dense(idx, idx).real();
    if (no_adjacent_rydberg(idx, 3)) {
      CHECK(e == doctest::Approx(0.0));
    } else {
      CHECK(e > 1.0);
    }
  }
}

TEST_CASE("dense Hamiltonian matches the long-range Ising spin form") {
  // 3-site oracle: H = sum_{l<j} U_lj (1+sz_l)(1+sz_j)/4
  //                  + sum_l (om/2)(cos(phi) sx_l + sin(phi) sy_l)
  //                  - sum_l delta_l (1+sz_l)/2
  const int L = 3;
  const auto g = ring_positions(L, 6.0);
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
  DriveTerms d;
  d.omega = {11.46, 10.0, 12.0};
  d.delta = {29.0, 25.0, 27.0};
  d.phi = 0.7;
  HamiltonianOperator H(U, d);

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(8, 8);
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(8, 8);
  for (int l = 0; l < L; ++l) {
    const Eigen::MatrixXcd nl = (id + embed(pauli_z(), l, L)) / 2.0;
    for (int j = l + 1; j < L; ++j) {
      const Eigen::MatrixXcd nj = (id + embed(pauli_z(), j, L)) / 2.0;
      expect += U(l, j) * nl * nj;
    }
    expect += (d.omega[l] / 2.0) * (std::cos(d.phi) * embed(pauli_x(), l, L) +
                                    std::sin(d.phi) * embed(pauli_y(), l, L));
    expect -= d.delta[l] * nl;
  }
  CHECK((H.dense() - expect).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("dense matrix is Hermitian within 1e-12") {
  const auto g = ring_positions(5, 6.0);
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::NextNearest);
  HamiltonianOperator H(U, DriveTerms::uniform(11.46, 29.0, 1.2));
  const auto dense = H.dense();
  CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("frozen apply agrees with the dense matrix") {
  const auto g = ring_positions(5, 6.0);
  const auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
  DriveTerms d = DriveTerms::uniform(11.46, 29.0, 0.4);
  HamiltonianOperator H(U, d);

  std::mt19937 eng(99);
  std::normal_distribution<double> nd;
  Eigen::VectorXcd x(32);
  for (auto& v : x.reshaped()) v = cplx(nd(eng), nd(eng));

  Eigen::VectorXcd y;
  H.freeze().apply(x, y);
  const Eigen::VectorXcd expect = H.dense() * x;
  CHECK((y - expect).cwiseAbs().maxCoeff() < 1e-10);

  // combo freeze equals the same linear combination of dense matrices
  DriveTerms d2 = DriveTerms::uniform(3.0, -11.0, 1.9);
  Eigen::VectorXcd yc;
  H.freeze_combo(0.3, d, 0.7, d2).apply(x, yc);
  const Eigen::VectorXcd expc = (0.3 * H.dense(d) + 0.7 * H.dense(d2)) * x;
  CHECK((yc - expc).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("per-site inhomogeneity scales the drive") {
  HamiltonianOperator H(Eigen::MatrixXd::Zero(2, 2),
                        DriveTerms::uniform(2.0, 1.0));
  H.set_site_inhomogeneity({1.0, 1.1}, {0.0, -0.5});
  const auto F = H.freeze();
  CHECK(std::abs(F.site_w[0]) == doctest::Approx(1.0));
  CHECK(std::abs(F.site_w[1]) == doctest::Approx(1.1));
  // index 2 = site 1 excited: diagonal carries -(1.0 - 0.5)
  CHECK(F.diag[2] == doctest::Approx(-0.5));
  CHECK(F.diag[1] == doctest::Approx(-1.0));
}

TEST_CASE("capacity and validation errors") {
  CHECK_THROWS_AS(HamiltonianOperator(Eigen::MatrixXd::Zero(14, 14),
                                      DriveTerms::uniform(1.0, 0.0)),
                  CapacityError);
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(HamiltonianOperator(asym, DriveTerms::uniform(1.0, 0.0)),
                  ValidationError);
  DriveTerms neg = DriveTerms::uniform(-1.0, 0.0);
  CHECK_THROWS_AS(HamiltonianOperator(Eigen::MatrixXd::Zero(2, 2), neg),
                  ValidationError);
  DriveTerms wrong;
  wrong.omega = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(HamiltonianOperator(Eigen::MatrixXd::Zero(2, 2), wrong),
                  ValidationError);
}

TEST_CASE("Table-1 parameters sit deep in the blockade regime") {
  // a^6 * Omega / C6 << 1
  const double ratio = std::pow(6.0, 6) * 11.46 / kDefaultC6;
  CHECK(ratio < 0.1);
}
