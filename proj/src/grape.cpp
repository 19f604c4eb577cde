#include "wring/grape.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "wring/rng.hpp"
#include "wring/rotation.hpp"

namespace wring {

void GrapeControls::validate() const {
  if (!(duration > 0.0)) throw ValidationError("control window must be > 0");
  if (omega.empty() || omega.size() != phi.size() ||
      omega.size() != delta.size()) {
    throw ValidationError("control vectors must share a nonzero slice count");
  }
  for (double w : omega) {
    if (w < 0.0) throw ValidationError("omega controls must be >= 0");
  }
}

namespace {

struct SliceData {
  Eigen::MatrixXcd U;
  Eigen::VectorXd lam;
  Eigen::MatrixXcd V;
};

SliceData slice_exponential(const HamiltonianOperator& op, double omega,
                            double delta, double phi, double dt) {
  SliceData s;
  const Eigen::MatrixXcd H = op.dense(DriveTerms::uniform(omega, delta, phi));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  s.lam = es.eigenvalues();
  s.V = es.eigenvectors();
  Eigen::VectorXcd ph(s.lam.size());
  for (Eigen::Index i = 0; i < ph.size(); ++i) {
    ph[i] = std::polar(1.0, -dt * s.lam(i));
  }
  s.U = s.V * ph.asDiagonal() * s.V.adjoint();
  return s;
}

// Frechet derivative of exp(-i dt H) along dH, in the eigenbasis of H.
Eigen::MatrixXcd expm_derivative(const SliceData& s, double dt,
                                 const Eigen::MatrixXcd& dH) {
  const Eigen::Index d = s.lam.size();
  Eigen::MatrixXcd E = s.V.adjoint() * dH * s.V;
  for (Eigen::Index a = 0; a < d; ++a) {
    const cplx fa = std::polar(1.0, -dt * s.lam(a));
    for (Eigen::Index b = 0; b < d; ++b) {
      const double gap = s.lam(a) - s.lam(b);
      cplx factor;
      if (std::abs(gap) < 1e-12) {
        factor = cplx(0.0, -dt) * fa;
      } else {
        factor = (fa - std::polar(1.0, -dt * s.lam(b))) / gap;
      }
      E(a, b) *= factor;
    }
  }
  return s.V * E * s.V.adjoint();
}

}  // namespace

Eigen::MatrixXcd grape_propagator(const HamiltonianOperator& op,
                                  const GrapeControls& c) {
  c.validate();
  const double dt = c.duration / c.slices();
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(op.dim(), op.dim());
  for (int s = 0; s < c.slices(); ++s) {
    U = slice_exponential(op, c.omega[s], c.delta[s], c.phi[s], dt).U * U;
  }
  return U;
}

double grape_objective(const HamiltonianOperator& op,
                       const Eigen::MatrixXcd& target,
                       const GrapeControls& c) {
  return operator_fidelity(target, grape_propagator(op, c), 1e-6);
}

GrapeControls grape_gradient(const HamiltonianOperator& op,
                             const Eigen::MatrixXcd& target,
                             const GrapeControls& c) {
  c.validate();
  const int S = c.slices();
  const double dt = c.duration / S;
  const Eigen::Index d = op.dim();
  if (std::size_t(target.rows()) != op.dim() || target.rows() != target.cols()) {
    throw ValidationError("target dimension does not match the Hamiltonian");
  }

  std::vector<SliceData> slices(S);
  for (int s = 0; s < S; ++s) {
    slices[s] = slice_exponential(op, c.omega[s], c.delta[s], c.phi[s], dt);
  }

  // prefix[s] = U_{s-1} ... U_0, suffix[s] = U_{S-1} ... U_{s+1}
  std::vector<Eigen::MatrixXcd> prefix(S + 1), suffix(S + 1);
  prefix[0] = Eigen::MatrixXcd::Identity(d, d);
  for (int s = 0; s < S; ++s) prefix[s + 1] = slices[s].U * prefix[s];
  suffix[S] = Eigen::MatrixXcd::Identity(d, d);
  for (int s = S - 1; s >= 0; --s) suffix[s] = suffix[s + 1] * slices[s].U;

  const cplx A = (target.adjoint() * prefix[S]).trace();
  const Eigen::MatrixXcd interactions =
      op.dense(DriveTerms::uniform(0.0, 0.0, 0.0));
  Eigen::VectorXcd number_diag(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    number_diag[i] = double(popcount64(std::uint64_t(i)));
  }

  GrapeControls grad = c;
  for (int s = 0; s < S; ++s) {
    // B = T^dag . suffix . (slot) . prefix: gradient of A w.r.t. U_s
    const Eigen::MatrixXcd left = target.adjoint() * suffix[s + 1];
    const Eigen::MatrixXcd right = prefix[s];

    auto grad_along = [&](const Eigen::MatrixXcd& dH) {
      const Eigen::MatrixXcd dU = expm_derivative(slices[s], dt, dH);
      const cplx dA = (left * dU * right).trace();
      return 2.0 * (std::conj(A) * dA).real() / double(d * d);
    };

    const Eigen::MatrixXcd x_unit =
        op.dense(DriveTerms::uniform(1.0, 0.0, c.phi[s])) - interactions;
    grad.omega[s] = grad_along(x_unit);
    const Eigen::MatrixXcd x_quad =
        op.dense(DriveTerms::uniform(1.0, 0.0, c.phi[s] + M_PI / 2)) -
        interactions;
    grad.phi[s] = grad_along(c.omega[s] * x_quad);
    grad.delta[s] =
        grad_along(Eigen::MatrixXcd((-number_diag).asDiagonal()));

    if (!std::isfinite(grad.omega[s]) || !std::isfinite(grad.phi[s]) ||
        !std::isfinite(grad.delta[s])) {
      throw NumericalError("non-finite control gradient in slice " +
                           std::to_string(s));
    }
  }
  return grad;
}

GrapeResult grape_optimize(const HamiltonianOperator& op,
                           const Eigen::MatrixXcd& target,
                           const GrapeControls& init,
                           const GrapeOptions& opts) {
  GrapeResult res;
  res.controls = init;
  res.fidelity = grape_objective(op, target, init);

  auto clip = [&](GrapeControls& c) {
    for (int s = 0; s < c.slices(); ++s) {
      c.omega[s] = std::clamp(c.omega[s], 0.0, opts.omega_max);
      c.delta[s] = std::clamp(c.delta[s], -opts.abs_delta_max,
                              opts.abs_delta_max);
    }
  };

  double step = opts.initial_step;
  GrapeControls current = init;
  double f_current = res.fidelity;
  for (int it = 0; it < opts.iterations; ++it) {
    const GrapeControls g = grape_gradient(op, target, current);
    bool improved = false;
    while (step > opts.min_step) {
      GrapeControls trial = current;
      for (int s = 0; s < trial.slices(); ++s) {
        if (opts.optimize_omega) trial.omega[s] += step * g.omega[s];
        if (opts.optimize_phi) trial.phi[s] += step * g.phi[s];
        if (opts.optimize_delta) trial.delta[s] += step * g.delta[s];
      }
      clip(trial);
      const double f_trial = grape_objective(op, target, trial);
      if (f_trial > f_current) {
        current = trial;
        f_current = f_trial;
        step *= 1.5;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (f_current > res.fidelity) {
      res.fidelity = f_current;
      res.controls = current;
    }
    res.trace.push_back(res.fidelity);
    if (!improved) break;
  }
  return res;
}

GrapeControls random_controls(double duration, int slices, double omega_max,
                              std::uint64_t seed) {
  if (slices < 1) throw ValidationError("need at least one control slice");
  Rng rng(seed);
  GrapeControls c;
  c.duration = duration;
  c.omega.resize(slices);
  c.phi.resize(slices);
  c.delta.resize(slices);
  for (int s = 0; s < slices; ++s) {
    c.omega[s] = rng.uniform(0.2, 0.8) * omega_max;
    c.phi[s] = rng.uniform(-M_PI, M_PI);
    c.delta[s] = rng.uniform(-10.0, 10.0);
  }
  return c;
}

Eigen::MatrixXcd rotation_target(int L) {
  return ideal_global_rotation(L, M_PI / 2, M_PI / 2);
}

PulseSchedule controls_to_schedule(const GrapeControls& c) {
  c.validate();
  const int S = c.slices();
  const double dt = c.duration / S;
  std::vector<std::pair<double, double>> om, ph, de;
  auto add = [&](std::vector<std::pair<double, double>>& v, double t, double x) {
    v.push_back({t, x});
  };
  for (int s = 0; s < S; ++s) {
    const double tm = (s + 0.5) * dt;
    add(om, tm, c.omega[s]);
    add(ph, tm, c.phi[s]);
    add(de, tm, c.delta[s]);
  }
  PulseSchedule out;
  out.omega = Waveform(std::move(om));
  out.phi = Waveform(std::move(ph));
  out.delta = Waveform(std::move(de));
  out.t_final = c.duration;
  return out;
}

}  // namespace wring
