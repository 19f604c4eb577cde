#include "wring/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "wring/observables.hpp"

namespace wring {

namespace {

HamiltonianOperator make_operator(const ProtocolConfig& cfg) {
  const auto g = ring_positions(cfg.L, cfg.a);
  return HamiltonianOperator(interaction_matrix(g, cfg.c6, cfg.truncation),
                             DriveTerms::uniform(cfg.omega, 0.0));
}

QuantumState all_ground(int L) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index(1) << L);
  psi[0] = 1.0;
  return QuantumState::pure(std::move(psi), L);
}

PulseSchedule prep_schedule(const ProtocolConfig& cfg, double t_final,
                            double delta_final) {
  PrepParams p;
  p.omega = cfg.omega;
  p.delta_final = delta_final;
  p.t_final = t_final;
  p.tau_omega_ramp = cfg.tau_omega_ramp;
  p.delta_initial = cfg.delta_initial;
  return build_prep_schedule(p);
}

double eval_fidelity(const HamiltonianOperator& op, const ProtocolConfig& cfg,
                     const QuantumState& psi0, double t_final,
                     double delta_final) {
  const auto s = prep_schedule(cfg, t_final, delta_final);
  const auto res = evolve_closed(op, s, psi0, cfg.evolve);
  return preparation_fidelity(res.final_state, cfg.L);
}

}  // namespace

double protocol_fidelity(const ProtocolConfig& cfg, double t_final,
                         double delta_final) {
  const auto op = make_operator(cfg);
  return eval_fidelity(op, cfg, all_ground(cfg.L), t_final, delta_final);
}

SweepResult sweep_detuning(const ProtocolConfig& cfg, double t_final,
                           double delta_min, double delta_max,
                           double delta_step) {
  if (!(delta_step > 0.0)) {
    throw ValidationError("detuning sweep needs step > 0");
  }
  const int n = int(std::floor((delta_max - delta_min) / delta_step + 1e-9)) + 1;
  if (n < 1) throw ValidationError("empty detuning grid");

  const auto op = make_operator(cfg);
  const auto psi0 = all_ground(cfg.L);
  prep_schedule(cfg, t_final, delta_min);  // validate durations up front

  SweepResult out;
  out.grid.resize(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      const double d = delta_min + i * delta_step;
      out.grid[i] = {d, eval_fidelity(op, cfg, psi0, t_final, d)};
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  // argmax with ties broken toward smaller delta: strict > on a forward scan
  out.best = out.grid.front();
  for (const auto& p : out.grid) {
    if (p.second > out.best.second) out.best = p;
  }
  return out;
}

namespace {

// Best (delta, F) near a previous incumbent, or over the whole window when
// there is none yet: coarse pass then one refinement at the fine step.
std::pair<double, double> optimize_delta(const HamiltonianOperator& op,
                                         const ProtocolConfig& cfg,
                                         const QuantumState& psi0,
                                         double t_final,
                                         const MinTimeOptions& mopts,
                                         const double* warm_delta,
                                         long& evals) {
  auto grid_best = [&](double lo, double hi,
                       double step) -> std::pair<double, double> {
    lo = std::max(lo, mopts.delta_min);
    hi = std::min(hi, mopts.delta_max);
    const int n = std::max(1, int(std::floor((hi - lo) / step + 1e-9)) + 1);
    std::vector<std::pair<double, double>> grid(n);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        const double d = lo + i * step;
        grid[i] = {d, eval_fidelity(op, cfg, psi0, t_final, d)};
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    evals += n;
    auto best = grid.front();
    for (const auto& p : grid) {
      if (p.second > best.second) best = p;
    }
    return best;
  };

  std::pair<double, double> best;
  if (warm_delta) {
    best = grid_best(*warm_delta - 3.0, *warm_delta + 3.0, mopts.delta_fine);
  } else {
    best = grid_best(mopts.delta_min, mopts.delta_max, mopts.delta_coarse);
    auto refined = grid_best(best.first - mopts.delta_coarse,
                             best.first + mopts.delta_coarse, mopts.delta_fine);
    if (refined.second > best.second) best = refined;
  }
  return best;
}

}  // namespace

MinTimeResult min_time_for_infidelity(const ProtocolConfig& cfg,
                                      const MinTimeOptions& opts) {
  if (!(opts.target > 0.0 && opts.target < 1.0)) {
    throw ValidationError("infidelity target must lie in (0, 1)");
  }
  const auto op = make_operator(cfg);
  const auto psi0 = all_ground(cfg.L);

  MinTimeResult out;
  double warm = 0.0;
  bool have_warm = false;

  auto attempt = [&](double t) {
    ProtocolConfig local = cfg;
    if (opts.tau_ratio > 0.0) local.tau_omega_ramp = opts.tau_ratio * t;
    const auto best = optimize_delta(op, local, psi0, t, opts,
                                     have_warm ? &warm : nullptr,
                                     out.evaluations);
    warm = best.first;
    have_warm = true;
    return best;
  };

  // Geometric bracketing.
  double lo = 0.0, hi = opts.t_start;
  std::pair<double, double> best_hi;
  while (true) {
    best_hi = attempt(hi);
    if (1.0 - best_hi.second <= opts.target) break;
    lo = hi;
    hi *= 2.0;
    if (hi > opts.t_max) {
      throw NumericalError(
          "min-time search exhausted: target infidelity not reachable below " +
          std::to_string(opts.t_max) + " us");
    }
  }

  // Bisection down to the requested relative width; hi always certified.
  while (hi - lo > opts.rel_width * hi) {
    const double mid = 0.5 * (lo + hi);
    const auto best_mid = attempt(mid);
    if (1.0 - best_mid.second <= opts.target) {
      hi = mid;
      best_hi = best_mid;
    } else {
      lo = mid;
    }
  }

  out.t_star = hi;
  out.delta_star = best_hi.first;
  out.fidelity = best_hi.second;
  return out;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) {
    throw ValidationError("power-law fit needs at least 3 points");
  }
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw ValidationError("power-law fit needs positive values");
    }
  }
  const int n = static_cast<int>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  const double alpha = (n * sxy - sx * sy) / denom;
  const double logc = (sy - alpha * sx) / n;

  double ssr = 0.0;
  for (const auto& [x, y] : points) {
    const double r = std::log(y) - (logc + alpha * std::log(x));
    ssr += r * r;
  }
  const double sigma2 = n > 2 ? ssr / (n - 2) : 0.0;

  PowerLawFit fit;
  fit.exponent = alpha;
  fit.prefactor = std::exp(logc);
  fit.stderr_exponent = std::sqrt(sigma2 * n / denom);
  fit.points_used = n;
  if (!std::isfinite(fit.exponent) || !std::isfinite(fit.prefactor)) {
    throw NumericalError("power-law fit produced non-finite parameters");
  }
  return fit;
}

}  // namespace wring
