#include "wring/lindblad.hpp"

#include <cmath>

#include "wring/rng.hpp"

namespace wring {

void NoiseParams::validate() const {
  if (gamma < 0 || sigma_pos < 0 || sigma_omega_rel < 0 || sigma_delta < 0) {
    throw ValidationError("noise rates must be >= 0");
  }
  if (p_g_to_r < 0 || p_g_to_r > 1 || p_r_to_g < 0 || p_r_to_g > 1) {
    throw ValidationError("readout flip probabilities must lie in [0, 1]");
  }
}

namespace {

// rho_ij *= exp(-gamma * tau * d_H(i,j) / 2): the dephasing dissipator is
// exactly diagonal in the pair basis, with rate proportional to the Hamming
// distance between the two strings.
void dephase(Eigen::MatrixXcd& rho, int L, double gamma, double tau) {
  if (gamma == 0.0 || tau == 0.0) return;
  std::vector<double> factor(L + 1);
  for (int d = 0; d <= L; ++d) factor[d] = std::exp(-0.5 * gamma * tau * d);
  const std::size_t dim = rho.rows();
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      const int d = popcount64(i ^ j);
      if (d) rho(i, j) *= factor[d];
    }
  }
}

void conjugate_by_exponentials(Eigen::MatrixXcd& rho,
                               const std::vector<FrozenHamiltonian>& exps,
                               double h, const EvolveOptions& opts,
                               long* matvecs) {
  const Eigen::Index dim = rho.rows();
  for (const auto& F : exps) {
    // rho <- U rho U^dagger, column-by-column through the Krylov stepper.
    for (Eigen::Index c = 0; c < dim; ++c) {
      krylov_expm_inplace(F, h, rho.col(c), opts.krylov_tol, opts.krylov_max,
                          matvecs);
    }
    rho.adjointInPlace();
    for (Eigen::Index c = 0; c < dim; ++c) {
      krylov_expm_inplace(F, h, rho.col(c), opts.krylov_tol, opts.krylov_max,
                          matvecs);
    }
    rho.adjointInPlace();
  }
}

}  // namespace

EvolutionResult evolve_open(const HamiltonianOperator& op,
                            const PulseSchedule& schedule,
                            const QuantumState& rho0, double gamma,
                            const EvolveOptions& opts) {
  schedule.validate();
  if (gamma < 0.0) throw ValidationError("dephasing rate must be >= 0");
  if (op.sites() > kDenseOpenMaxSites) {
    throw CapacityError("dense open-system evolution capped at L=" +
                        std::to_string(kDenseOpenMaxSites) +
                        "; use trajectories beyond");
  }
  const QuantumState dens0 = rho0.to_density();
  dens0.validate(1e-9);
  if (std::size_t(dens0.rho().rows()) != op.dim()) {
    throw ValidationError("state dimension does not match the Hamiltonian");
  }

  Eigen::MatrixXcd rho = dens0.rho();
  EvolutionResult result{QuantumState::density(rho, op.sites()), {}, {}};

  const auto steps = schedule_steps(schedule, opts.dt);
  std::size_t snap_ptr = 0;
  for (const auto& [t0, h] : steps) {
    dephase(rho, op.sites(), gamma, 0.5 * h);
    conjugate_by_exponentials(rho,
                              step_exponentials(op, schedule, t0, h, opts.method),
                              h, opts, &result.diagnostics.matvecs);
    dephase(rho, op.sites(), gamma, 0.5 * h);
    ++result.diagnostics.steps;
    const double t_end = t0 + h;
    while (snap_ptr < opts.snapshot_times.size() &&
           opts.snapshot_times[snap_ptr] <= t_end + 1e-12) {
      result.snapshots.emplace_back(t_end,
                                    QuantumState::density(rho, op.sites()));
      ++snap_ptr;
    }
  }

  result.diagnostics.trace_drift = std::abs(rho.trace().real() - 1.0);
  result.final_state = QuantumState::density(std::move(rho), op.sites());
  return result;
}

QuantumState evolve_trajectory(const HamiltonianOperator& op,
                               const PulseSchedule& schedule,
                               const QuantumState& psi0, double gamma,
                               std::uint64_t seed, const EvolveOptions& opts) {
  schedule.validate();
  if (!psi0.is_pure()) {
    throw ValidationError("trajectory unravelling starts from a pure state");
  }
  if (op.sites() > kTrajectoryMaxSites) {
    throw CapacityError("trajectory path capped at L=" +
                        std::to_string(kTrajectoryMaxSites));
  }
  const int L = op.sites();
  const std::size_t dim = op.dim();
  Eigen::VectorXcd psi = psi0.psi();
  Rng rng(seed);

  const auto steps = schedule_steps(schedule, opts.dt);
  for (const auto& [t0, h] : steps) {
    for (const auto& F : step_exponentials(op, schedule, t0, h, opts.method)) {
      krylov_expm_inplace(F, h, psi, opts.krylov_tol, opts.krylov_max, nullptr);
    }
    if (gamma == 0.0) continue;

    // No-jump decay exp(-gamma h n/2) split off the unitary part; jump
    // decisions subdivided so each carries a small probability.
    const int subs = std::max(1, int(std::ceil(gamma * h * L / 0.04)));
    const double tau = h / subs;
    for (int s = 0; s < subs; ++s) {
      const double before = psi.squaredNorm();
      std::vector<double> site_weight(L, 0.0);
      for (std::size_t i = 0; i < dim; ++i) {
        const double w = std::norm(psi[i]);
        if (w == 0.0) continue;
        std::uint32_t bits = std::uint32_t(i);
        while (bits) {
          site_weight[__builtin_ctz(bits)] += w;
          bits &= bits - 1;
        }
      }
      for (std::size_t i = 0; i < dim; ++i) {
        psi[i] *= std::exp(-0.5 * gamma * tau * popcount64(i));
      }
      const double p_nojump = psi.squaredNorm() / before;
      if (rng.uniform() < 1.0 - p_nojump) {
        // Jump: project onto n_l for a site drawn by its excitation weight.
        double total = 0.0;
        for (double w : site_weight) total += w;
        double pick = rng.uniform() * total;
        int site = 0;
        for (; site < L - 1; ++site) {
          pick -= site_weight[site];
          if (pick <= 0.0) break;
        }
        for (std::size_t i = 0; i < dim; ++i) {
          if (!(i >> site & 1u)) psi[i] = 0.0;
        }
      }
      const double n = psi.norm();
      if (n < 1e-300) {
        throw NumericalError("trajectory norm collapsed to zero");
      }
      psi /= n;
    }
  }
  if (gamma == 0.0) {
    const double n = psi.norm();
    if (n > 0) psi /= n;
  }
  return QuantumState::pure(std::move(psi), L);
}

std::pair<double, double> trajectory_average(
    const HamiltonianOperator& op, const PulseSchedule& schedule,
    const QuantumState& psi0, double gamma, int n_traj, std::uint64_t seed,
    const std::function<double(const QuantumState&)>& obs,
    const EvolveOptions& opts) {
  if (n_traj < 1) throw ValidationError("need at least one trajectory");
  std::vector<double> vals(n_traj);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < n_traj; ++t) {
    try {
      const auto fin = evolve_trajectory(op, schedule, psi0, gamma,
                                         derive_seed(seed, t), opts);
      vals[t] = obs(fin);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= n_traj;
  double var = 0.0;
  for (double v : vals) var += (v - mean) * (v - mean);
  var = n_traj > 1 ? var / (n_traj - 1) : 0.0;
  return {mean, std::sqrt(var / n_traj)};
}

}  // namespace wring
