#include "wring/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "wring/kernels.hpp"
#include "wring/rng.hpp"

namespace wring {

namespace {

Eigen::VectorXcd random_unit_vector(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = cplx(rng.normal(0.0, 1.0), rng.normal(0.0, 1.0));
  }
  v.normalize();
  return v;
}

void project_out(const std::vector<Eigen::VectorXcd>& basis,
                 Eigen::VectorXcd& v) {
  const std::size_t dim = v.size();
  for (const auto& q : basis) {
    const cplx c = kernels::zdotc(dim, q.data(), v.data());
    if (std::abs(c) > 0.0) kernels::zaxpy(dim, -c, q.data(), v.data());
  }
}

// Lowest eigenpair of H restricted to the complement of `deflated`.
// Accepted pairs are certified by the full-space residual ||H y - theta y||,
// never by the tridiagonal estimate alone.
std::pair<double, Eigen::VectorXcd> lowest_deflated(
    const FrozenHamiltonian& H, const std::vector<Eigen::VectorXcd>& deflated,
    double tol, int max_iter, std::uint64_t seed) {
  const std::size_t dim = H.dim;
  Eigen::VectorXcd v0 = random_unit_vector(dim, seed);
  project_out(deflated, v0);
  double n0 = v0.norm();
  if (n0 < 1e-8) {
    v0 = random_unit_vector(dim, seed + 1);
    project_out(deflated, v0);
    n0 = v0.norm();
  }
  v0 /= n0;

  std::vector<Eigen::VectorXcd> V;
  V.push_back(v0);
  Eigen::VectorXd alpha(max_iter), beta(max_iter);
  Eigen::VectorXcd w(dim), Hy(dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;

  for (int j = 0; j < max_iter; ++j) {
    H.apply(V[j].data(), w.data());
    if (j > 0) kernels::zaxpy(dim, -beta(j - 1), V[j - 1].data(), w.data());
    const cplx a = kernels::zdotc(dim, V[j].data(), w.data());
    alpha(j) = a.real();
    kernels::zaxpy(dim, -a, V[j].data(), w.data());
    project_out(deflated, w);
    for (int k = 0; k <= j; ++k) {
      const cplx c = kernels::zdotc(dim, V[k].data(), w.data());
      if (std::abs(c) > 1e-14) kernels::zaxpy(dim, -c, V[k].data(), w.data());
    }
    const double b = std::sqrt(kernels::nrm2sq(dim, w.data()));
    beta(j) = b;
    const int m = j + 1;

    const bool check = (m >= 2 && m % 5 == 0) || b < 1e-12 || m == max_iter;
    if (check) {
      es.computeFromTridiagonal(alpha.head(m), beta.head(std::max(0, m - 1)));
      if (es.info() != Eigen::Success) {
        if (b < 1e-12) break;
        if (j + 1 < max_iter) V.push_back(w / b);
        continue;
      }
      const double est = b * std::abs(es.eigenvectors()(m - 1, 0));
      const double scale = std::max(1.0, std::abs(es.eigenvalues()(0)));
      if (est < tol * scale || b < 1e-12) {
        Eigen::VectorXcd y = Eigen::VectorXcd::Zero(dim);
        for (int k = 0; k < m; ++k) {
          kernels::zaxpy(dim, cplx(es.eigenvectors()(k, 0), 0.0), V[k].data(),
                         y.data());
        }
        project_out(deflated, y);
        const double ny = y.norm();
        if (ny > 1e-8) {
          y /= ny;
          H.apply(y.data(), Hy.data());
          const double theta = kernels::zdotc(dim, y.data(), Hy.data()).real();
          kernels::zaxpy(dim, cplx(-theta, 0.0), y.data(), Hy.data());
          const double resid = std::sqrt(kernels::nrm2sq(dim, Hy.data()));
          if (resid < 20.0 * tol * std::max(1.0, std::abs(theta))) {
            return {theta, std::move(y)};
          }
        }
        if (b < 1e-12) break;  // Krylov space exhausted without a certificate
      }
    }
    if (j + 1 < max_iter) V.push_back(w / b);
  }
  throw NumericalError("lanczos did not converge within max_iter");
}

}  // namespace

std::vector<double> lanczos_lowest(const FrozenHamiltonian& H, int k,
                                   double tol, int max_iter,
                                   std::uint64_t seed) {
  std::vector<Eigen::VectorXcd> deflated;
  std::vector<double> evals;
  for (int i = 0; i < k; ++i) {
    for (int attempt = 0;; ++attempt) {
      try {
        auto [theta, y] = lowest_deflated(
            H, deflated, tol, max_iter, derive_seed(seed, 8 * i + attempt));
        evals.push_back(theta);
        deflated.push_back(std::move(y));
        break;
      } catch (const NumericalError&) {
        if (attempt >= 2) throw;
      }
    }
  }
  std::sort(evals.begin(), evals.end());
  return evals;
}

SpectrumResult spectral_gap(const HamiltonianOperator& op,
                            const SpectrumOptions& opts) {
  const int k = std::max(2, opts.k);
  if (op.dim() < std::size_t(k)) {
    throw ValidationError("need dimension >= k for a spectral gap");
  }
  SpectrumResult out;
  if (op.dim() <= opts.dense_dim_cap) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.dense(),
                                                       Eigen::EigenvaluesOnly);
    out.evals.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
    out.used_dense = true;
  } else {
    out.evals =
        lanczos_lowest(op.freeze(), k, opts.tol, opts.max_iter, opts.seed);
    out.used_dense = false;
  }
  out.gap = out.evals[1] - out.evals[0];

  int m = 1;
  for (int cand = 2; cand < k; ++cand) {
    const double spread = out.evals[cand - 1] - out.evals[0];
    const double above = out.evals[cand] - out.evals[cand - 1];
    if (spread <= opts.cluster_eta * above) m = cand;
  }
  out.ground_degeneracy = m;
  out.band_gap = out.evals[m] - out.evals[m - 1];
  return out;
}

}  // namespace wring
