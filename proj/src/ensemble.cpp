#include "wring/ensemble.hpp"

#include <cmath>

#include "wring/basis.hpp"
#include "wring/observables.hpp"
#include "wring/rng.hpp"
#include "wring/rotation.hpp"

namespace wring {

NoiseRealization draw_noise_realization(const RingGeometry& ideal,
                                        const NoiseParams& noise,
                                        std::uint64_t seed) {
  noise.validate();
  NoiseRealization real;
  real.seed = seed;
  real.geometry = (noise.sigma_pos > 0.0)
                      ? perturb_positions(ideal, noise.sigma_pos,
                                          noise.sigma_pos, derive_seed(seed, 1))
                      : ideal;
  Rng rng(derive_seed(seed, 2));
  real.omega_scale =
      noise.sigma_omega_rel > 0.0
          ? std::max(0.0, 1.0 + rng.normal(0.0, noise.sigma_omega_rel))
          : 1.0;
  real.delta_offset =
      noise.sigma_delta > 0.0 ? rng.normal(0.0, noise.sigma_delta) : 0.0;
  return real;
}

namespace {

PulseSchedule noisy_prep_schedule(const PrepParams& base,
                                  const NoiseRealization& real) {
  PrepParams p = base;
  p.omega *= real.omega_scale;
  p.delta_final += real.delta_offset;
  p.delta_initial += real.delta_offset;
  return build_prep_schedule(p);
}

PulseSchedule noisy_rotation_schedule(const RotationParams& base,
                                      const NoiseRealization& real) {
  RotationParams r = base;
  r.omega_rot *= real.omega_scale;
  PulseSchedule s = build_rotation_schedule(r);
  // the commanded detuning is zero; the shot's offset remains
  s.delta = Waveform::constant(0.0, s.t_final, real.delta_offset);
  return s;
}

QuantumState all_ground(int L) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index(1) << L);
  psi[0] = 1.0;
  return QuantumState::pure(std::move(psi), L);
}

double exact_estimator(const QuantumState& state, int L) {
  const auto p = kink_probabilities(state.z_probabilities(), L);
  const double px = px_expectation(state, L);
  return fidelity_from_counts(p, px, L).value;
}

EnsembleMember simulate_member_dense(const EnsembleConfig& cfg,
                                     const NoiseRealization& real,
                                     std::uint64_t member_seed) {
  const auto U = interaction_matrix(real.geometry, cfg.c6, cfg.truncation);
  HamiltonianOperator op(U, DriveTerms::uniform(0.0, 0.0));

  const auto prep = noisy_prep_schedule(cfg.prep, real);
  const auto rho =
      evolve_open(op, prep, all_ground(cfg.L).to_density(), cfg.noise.gamma,
                  cfg.evolve)
          .final_state;

  EnsembleMember m;
  m.seed = member_seed;
  m.omega_scale = real.omega_scale;
  m.delta_offset = real.delta_offset;
  m.z_dist = readout_forward(rho.z_probabilities(), cfg.L, cfg.readout);
  for (const auto& rot : cfg.rotations) {
    const auto rotated = apply_rotation(rho, noisy_rotation_schedule(rot, real),
                                        op, cfg.noise.gamma, cfg.evolve);
    m.x_dists.push_back(
        readout_forward(rotated.z_probabilities(), cfg.L, cfg.readout));
  }
  m.f_estimator = exact_estimator(rho, cfg.L);
  if (cfg.keep_states) m.state = rho;
  return m;
}

EnsembleMember simulate_member_trajectories(const EnsembleConfig& cfg,
                                            const NoiseRealization& real,
                                            std::uint64_t member_seed) {
  const auto U = interaction_matrix(real.geometry, cfg.c6, cfg.truncation);
  HamiltonianOperator op(U, DriveTerms::uniform(0.0, 0.0));
  const auto prep = noisy_prep_schedule(cfg.prep, real);
  const int nt = cfg.trajectories_per_member;
  const std::size_t dim = op.dim();

  EnsembleMember m;
  m.seed = member_seed;
  m.omega_scale = real.omega_scale;
  m.delta_offset = real.delta_offset;
  Eigen::VectorXd z = Eigen::VectorXd::Zero(dim);
  std::vector<Eigen::VectorXd> xs(cfg.rotations.size(),
                                  Eigen::VectorXd::Zero(dim));
  double f_sum = 0.0;
  for (int t = 0; t < nt; ++t) {
    const auto traj_seed = derive_seed(member_seed, 100 + t);
    const auto psi = evolve_trajectory(op, prep, all_ground(cfg.L),
                                       cfg.noise.gamma, traj_seed, cfg.evolve);
    z += psi.z_probabilities();
    f_sum += exact_estimator(psi, cfg.L);
    for (std::size_t a = 0; a < cfg.rotations.size(); ++a) {
      const auto rot = noisy_rotation_schedule(cfg.rotations[a], real);
      const auto rotated =
          evolve_trajectory(op, rot, psi, cfg.noise.gamma,
                            derive_seed(traj_seed, a + 1), cfg.evolve);
      xs[a] += rotated.z_probabilities();
    }
  }
  m.z_dist = readout_forward(z / nt, cfg.L, cfg.readout);
  for (auto& x : xs) {
    m.x_dists.push_back(readout_forward(x / nt, cfg.L, cfg.readout));
  }
  m.f_estimator = f_sum / nt;
  return m;
}

}  // namespace

EnsembleMember simulate_member(const EnsembleConfig& cfg,
                               std::uint64_t member_seed) {
  if (cfg.L > kTrajectoryMaxSites) {
    throw CapacityError("ensemble simulation capped at L=13");
  }
  const auto ideal = ring_positions(cfg.L, cfg.a);
  const auto real = draw_noise_realization(ideal, cfg.noise, member_seed);
  if (cfg.L <= kDenseOpenMaxSites) {
    return simulate_member_dense(cfg, real, member_seed);
  }
  return simulate_member_trajectories(cfg, real, member_seed);
}

PriorEnsemble build_prior_ensemble(const EnsembleConfig& cfg,
                                   std::uint64_t seed) {
  if (cfg.Q < 1) throw ValidationError("ensemble needs Q >= 1 members");
  cfg.noise.validate();
  cfg.readout.validate();

  PriorEnsemble ens;
  ens.config = cfg;
  ens.seed = seed;
  ens.members.resize(cfg.Q);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < cfg.Q; ++j) {
    try {
      ens.members[j] = simulate_member(cfg, derive_seed(seed, j));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return ens;
}

std::vector<double> PriorEnsemble::member_fidelities() const {
  std::vector<double> f;
  f.reserve(members.size());
  for (const auto& m : members) f.push_back(m.f_estimator);
  return f;
}

double PriorEnsemble::prior_mean() const {
  double s = 0.0;
  for (const auto& m : members) s += m.f_estimator;
  return s / double(members.size());
}

double PriorEnsemble::prior_spread() const {
  const double mean = prior_mean();
  double var = 0.0;
  for (const auto& m : members) {
    var += (m.f_estimator - mean) * (m.f_estimator - mean);
  }
  return std::sqrt(var / double(members.size()));
}

Eigen::MatrixXd log_likelihood_matrix(const PriorEnsemble& ensemble,
                                      const std::vector<ExperimentData>& data) {
  const Eigen::Index q = ensemble.members.size();
  const Eigen::Index m = data.size();
  if (m < 1) throw ValidationError("need at least one experiment");
  Eigen::MatrixXd out(q, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    const auto& d = data[a];
    if (d.n_shots < 1) throw ValidationError("experiment has no shots");
    const double eps = default_epsilon(d.n_shots);
    for (Eigen::Index j = 0; j < q; ++j) {
      const auto& member = ensemble.members[j];
      const Eigen::VectorXd& pred =
          d.rotation_index < 0 ? member.z_dist
                               : member.x_dists.at(d.rotation_index);
      out(j, a) = log_likelihood(d.histogram, pred, d.n_shots, eps);
    }
  }
  return out;
}

}  // namespace wring
