#include <random>

#include "doctest.h"
#include "wring/basis.hpp"
#include "wring/observables.hpp"

using namespace wring;

namespace {

// Independent dense oracle: build P_x by explicit kron products of sigma_x.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return out;
}

Eigen::MatrixXcd dense_px_operator(int L) {
  Eigen::Matrix2cd sx, id;
  sx << 0, 1, 1, 0;
  id << 1, 0, 0, 1;
  const std::size_t dim = std::size_t(1) << L;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n <= (L - 1) / 2; ++n) {
    for (int a = 0; a < L; ++a) {
      Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(1, 1);
      for (int l = L - 1; l >= 0; --l) {
        bool in_window = false;
        for (int w = a; w < a + 2 * n; ++w) {
          if (w % L == l) in_window = true;
        }
        term = kron(term, in_window ? Eigen::MatrixXcd(sx) : Eigen::MatrixXcd(id));
      }
      total += term;
    }
  }
  return total;
}

Eigen::MatrixXcd random_kink_supported_density(int L, unsigned seed) {
  const auto kinks = kink_indices(L);
  std::mt19937 eng(seed);
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd A(L, L);
  for (Eigen::Index i = 0; i < L; ++i) {
    for (Eigen::Index j = 0; j < L; ++j) A(i, j) = cplx(nd(eng), nd(eng));
  }
  Eigen::MatrixXcd small = A * A.adjoint();
  small /= small.trace();
  const std::size_t dim = std::size_t(1) << L;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) rho(kinks[i], kinks[j]) = small(i, j);
  }
  return rho;
}

}  // namespace

TEST_CASE("P_x expectation on the kink superposition equals L - 1") {
  for (int L : {3, 5, 7, 9}) {
    CHECK(std::abs(px_expectation(kink_superposition(L), L) - (L - 1)) < 1e-10);
  }
}

TEST_CASE("hand evaluation at L=3 gives 2") {
  CHECK(px_expectation(kink_superposition(3), 3) == doctest::Approx(2.0));
}

TEST_CASE("incoherent kink mixture has vanishing P_x") {
  for (int L : {3, 5, 7}) {
    const std::size_t dim = std::size_t(1) << L;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (auto idx : kink_indices(L)) rho(idx, idx) = 1.0 / L;
    CHECK(std::abs(px_expectation(QuantumState::density(rho, L), L)) < 1e-12);
  }
}

TEST_CASE("P_x agrees with the dense operator oracle") {
  std::mt19937 eng(4);
  std::normal_distribution<double> nd;
  for (int L : {3, 5, 7}) {
    const auto op = dense_px_operator(L);
    const std::size_t dim = std::size_t(1) << L;

    Eigen::VectorXcd psi(dim);
    for (auto& x : psi.reshaped()) x = cplx(nd(eng), nd(eng));
    psi.normalize();
    const cplx direct = psi.adjoint() * op * psi;
    CHECK(std::abs(px_expectation(QuantumState::pure(psi, L), L) -
                   direct.real()) < 1e-10);

    const auto rho = random_kink_supported_density(L, 17 + L);
    const cplx tr = (rho * op).trace();
    CHECK(std::abs(px_expectation(QuantumState::density(rho, L), L) -
                   tr.real()) < 1e-10);
  }
}

TEST_CASE("preparation fidelity on exact states") {
  for (int L : {3, 5}) {
    const auto ks = kink_superposition(L);
    CHECK(preparation_fidelity(ks, L) == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::VectorXcd ortho = Eigen::VectorXcd::Zero(Eigen::Index(1) << L);
    ortho[0] = 1.0;  // all-g has no kink component
    CHECK(preparation_fidelity(QuantumState::pure(ortho, L), L) == 0.0);

    CHECK(preparation_fidelity(ks.to_density(), L) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(preparation_fidelity(kink_superposition(3), 4),
                  ValidationError);
}

TEST_CASE("magnetization histogram counts Rydberg atoms") {
  const auto ks = kink_superposition(5);
  const auto h = magnetization_histogram(ks.z_probabilities(), 5);
  REQUIRE(h.size() == 6);
  // every kink string has exactly 2 Rydberg atoms
  CHECK(h[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(h[0] == 0.0);
}
