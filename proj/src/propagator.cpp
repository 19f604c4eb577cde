#include "wring/propagator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "wring/kernels.hpp"

namespace wring {

namespace {

// exp(-i dt T) e1 for the real symmetric tridiagonal T_m.
Eigen::VectorXcd expm_tridiag_e1(const Eigen::VectorXd& alpha,
                                 const Eigen::VectorXd& beta, double dt) {
  const int m = static_cast<int>(alpha.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(alpha, beta.head(std::max(0, m - 1)));
  if (es.info() != Eigen::Success) {
    throw NumericalError("tridiagonal eigensolve failed in krylov stepper");
  }
  const auto& S = es.eigenvectors();
  const auto& lam = es.eigenvalues();
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(m);
  for (int k = 0; k < m; ++k) {
    const cplx c = S(0, k) * std::polar(1.0, -dt * lam(k));
    u += c * S.col(k);
  }
  return u;
}

}  // namespace

void krylov_expm_inplace(const FrozenHamiltonian& H, double dt,
                         Eigen::Ref<Eigen::VectorXcd> psi, double tol,
                         int max_m, long* matvecs) {
  const std::size_t dim = H.dim;
  const double beta0 = std::sqrt(kernels::nrm2sq(dim, psi.data()));
  if (beta0 < 1e-300) return;

  std::vector<Eigen::VectorXcd> V;
  V.emplace_back(psi / beta0);
  Eigen::VectorXd alpha(max_m), beta(max_m);
  Eigen::VectorXcd w(dim);
  Eigen::VectorXcd u;

  int m = 0;
  bool converged = false;
  for (int j = 0; j < max_m; ++j) {
    H.apply(V[j].data(), w.data());
    if (matvecs) ++*matvecs;
    if (j > 0) kernels::zaxpy(dim, -beta(j - 1), V[j - 1].data(), w.data());
    const cplx a = kernels::zdotc(dim, V[j].data(), w.data());
    alpha(j) = a.real();
    kernels::zaxpy(dim, -a, V[j].data(), w.data());
    // One classical Gram-Schmidt pass keeps the basis orthogonal enough for
    // the short expansions used here.
    for (int k = 0; k <= j; ++k) {
      const cplx c = kernels::zdotc(dim, V[k].data(), w.data());
      if (std::abs(c) > 1e-14) kernels::zaxpy(dim, -c, V[k].data(), w.data());
    }
    const double b = std::sqrt(kernels::nrm2sq(dim, w.data()));
    beta(j) = b;
    m = j + 1;

    u = expm_tridiag_e1(alpha.head(m), beta.head(m), dt);
    const double err = b * std::abs(u(m - 1));
    if (err < tol || b < 1e-13) {
      converged = true;
      break;
    }
    if (j + 1 < max_m) V.emplace_back(w / b);
  }
  if (!converged) {
    throw NumericalError(
        "krylov exponential did not reach tol=" + std::to_string(tol) +
        " within m=" + std::to_string(max_m) +
        " (reduce dt or raise krylov_max)");
  }

  psi.setZero();
  for (int k = 0; k < m; ++k) {
    kernels::zaxpy(dim, beta0 * u(k), V[k].data(), psi.data());
  }
}

std::vector<std::pair<double, double>> schedule_steps(
    const PulseSchedule& schedule, double dt) {
  const double T = schedule.t_final;
  std::vector<double> bounds{0.0};
  for (const Waveform* w : {&schedule.omega, &schedule.delta, &schedule.phi}) {
    for (const auto& [t, v] : w->breakpoints()) {
      if (t > 1e-12 && t < T - 1e-12) bounds.push_back(t);
    }
  }
  bounds.push_back(T);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end(),
                           [](double a, double b) { return b - a < 1e-12; }),
               bounds.end());

  std::vector<std::pair<double, double>> steps;
  for (std::size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
    const double seg_len = bounds[seg + 1] - bounds[seg];
    const long n =
        std::max<long>(1, std::lround(std::ceil(seg_len / dt - 1e-12)));
    const double h = seg_len / double(n);
    for (long s = 0; s < n; ++s) steps.emplace_back(bounds[seg] + s * h, h);
  }
  return steps;
}

std::vector<FrozenHamiltonian> step_exponentials(const HamiltonianOperator& op,
                                                 const PulseSchedule& schedule,
                                                 double t0, double h,
                                                 EvolveOptions::Method method) {
  std::vector<FrozenHamiltonian> out;
  if (method == EvolveOptions::Method::PiecewiseConstant) {
    const double tm = t0 + 0.5 * h;
    out.push_back(op.freeze_at(schedule.omega(tm), schedule.delta(tm),
                               schedule.phi(tm)));
    return out;
  }
  // Gauss-Legendre nodes and the commutator-free fourth-order weights.
  const double root3over6 = std::sqrt(3.0) / 6.0;
  const double tA = t0 + (0.5 - root3over6) * h;
  const double tB = t0 + (0.5 + root3over6) * h;
  const double a1 = 0.25 - root3over6, a2 = 0.25 + root3over6;
  const auto dA =
      DriveTerms::uniform(schedule.omega(tA), schedule.delta(tA), schedule.phi(tA));
  const auto dB =
      DriveTerms::uniform(schedule.omega(tB), schedule.delta(tB), schedule.phi(tB));
  out.push_back(op.freeze_combo(a2, dA, a1, dB));
  out.push_back(op.freeze_combo(a1, dA, a2, dB));
  return out;
}

EvolutionResult evolve_closed(const HamiltonianOperator& op,
                              const PulseSchedule& schedule,
                              const QuantumState& psi0,
                              const EvolveOptions& opts) {
  schedule.validate();
  psi0.validate(1e-9);
  if (!psi0.is_pure()) {
    throw ValidationError("evolve_closed expects a pure state");
  }
  if (std::size_t(psi0.psi().size()) != op.dim()) {
    throw ValidationError("state dimension does not match the Hamiltonian");
  }

  Eigen::VectorXcd psi = psi0.psi();
  EvolutionResult result{QuantumState::pure(psi, op.sites()), {}, {}};

  const auto steps = schedule_steps(schedule, opts.dt);
  std::size_t snap_ptr = 0;
  for (const auto& [t0, h] : steps) {
    for (const auto& F : step_exponentials(op, schedule, t0, h, opts.method)) {
      krylov_expm_inplace(F, h, psi, opts.krylov_tol, opts.krylov_max,
                          &result.diagnostics.matvecs);
    }
    ++result.diagnostics.steps;
    const double t_end = t0 + h;
    while (snap_ptr < opts.snapshot_times.size() &&
           opts.snapshot_times[snap_ptr] <= t_end + 1e-12) {
      result.snapshots.emplace_back(t_end, QuantumState::pure(psi, op.sites()));
      ++snap_ptr;
    }
  }

  result.diagnostics.norm_drift = std::abs(psi.norm() - 1.0);
  result.final_state = QuantumState::pure(std::move(psi), op.sites());
  return result;
}

}  // namespace wring
