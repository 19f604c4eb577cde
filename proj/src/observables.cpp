#include "wring/observables.hpp"

#include <cmath>

#include "wring/basis.hpp"

namespace wring {

QuantumState kink_superposition(int L) {
  require_odd(L, "kink superposition");
  const std::size_t dim = std::size_t(1) << L;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  const double amp = 1.0 / std::sqrt(double(L));
  for (std::uint32_t idx : kink_indices(L)) psi[idx] = amp;
  return QuantumState::pure(std::move(psi), L);
}

double preparation_fidelity(const QuantumState& state, int L) {
  require_odd(L, "preparation fidelity");
  const auto kinks = kink_indices(L);
  const double amp = 1.0 / std::sqrt(double(L));
  if (state.is_pure()) {
    cplx overlap = 0.0;
    for (std::uint32_t idx : kinks) overlap += amp * state.psi()[idx];
    return std::norm(overlap);
  }
  cplx val = 0.0;
  for (std::uint32_t i : kinks) {
    for (std::uint32_t j : kinks) {
      val += state.rho()(i, j);
    }
  }
  return val.real() / double(L);
}

std::vector<std::uint32_t> px_window_masks(int L) {
  std::vector<std::uint32_t> masks;
  for (int n = 1; n <= (L - 1) / 2; ++n) {
    for (int a = 0; a < L; ++a) {
      std::uint32_t m = 0;
      for (int l = a; l < a + 2 * n; ++l) m |= 1u << (l % L);
      masks.push_back(m);
    }
  }
  return masks;
}

double px_expectation(const QuantumState& state, int L) {
  const auto masks = px_window_masks(L);
  const std::size_t dim = std::size_t(1) << L;
  double total = 0.0;
  if (state.is_pure()) {
    const auto& psi = state.psi();
    for (std::uint32_t mask : masks) {
      cplx term = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        term += std::conj(psi[i]) * psi[i ^ mask];
      }
      total += term.real();
    }
    return total;
  }
  const auto& rho = state.rho();
  for (std::uint32_t mask : masks) {
    cplx term = 0.0;
    for (std::size_t i = 0; i < dim; ++i) term += rho(i ^ mask, i);
    total += term.real();
  }
  return total;
}

std::vector<double> magnetization_histogram(const Eigen::VectorXd& z_probs,
                                            int L) {
  std::vector<double> h(L + 1, 0.0);
  for (Eigen::Index i = 0; i < z_probs.size(); ++i) {
    h[popcount64(std::uint64_t(i))] += z_probs[i];
  }
  return h;
}

}  // namespace wring
